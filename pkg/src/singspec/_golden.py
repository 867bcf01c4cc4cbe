"""Printed reference values, transcribed verbatim into canonical text form.

Cells that disagree with exact recomputation are kept as printed; the
explanations live in ``tables.KNOWN_DISCREPANCIES``.
"""

# (n, d) -> gamma(d) star-raised to n+1
GAMMA_APPENDIX = {
    (2, 2): "1[1/2]",
    (2, 3): "1[0] + 3[1/3] + 3[2/3] + 1[1]",
    (2, 4): "1[-1/4] + 3[0] + 6[1/4] + 7[1/2] + 6[3/4] + 3[1] + 1[5/4]",
    (2, 5): "1[-2/5] + 3[-1/5] + 6[0] + 10[1/5] + 12[2/5] + 12[3/5] + 10[4/5] + 6[1] + 3[6/5] + 1[7/5]",
    (2, 6): "1[-1/2] + 3[-1/3] + 6[-1/6] + 10[0] + 15[1/6] + 18[1/3] + 19[1/2] + 18[2/3] + 15[5/6] + 10[1] + 6[7/6] + 3[4/3] + 1[3/2]",
    (2, 7): "1[-4/7] + 3[-3/7] + 6[-2/7] + 10[-1/7] + 15[0] + 21[1/7] + 25[2/7] + 27[3/7] + 27[4/7] + 25[5/7] + 21[6/7] + 15[1] + 10[8/7] + 6[9/7] + 3[10/7] + 1[11/7]",
    (3, 2): "1[1]",
    (3, 3): "1[1/3] + 4[2/3] + 6[1] + 4[4/3] + 1[5/3]",
    (3, 4): "1[0] + 4[1/4] + 10[1/2] + 16[3/4] + 19[1] + 16[5/4] + 10[3/2] + 4[7/4] + 1[2]",
    (3, 5): "1[-1/5] + 4[0] + 10[1/5] + 20[2/5] + 31[3/5] + 40[4/5] + 44[1] + 40[6/5] + 31[7/5] + 20[8/5] + 10[9/5] + 4[2] + 1[11/5]",
    (3, 6): "1[-1/3] + 4[-1/6] + 10[0] + 20[1/6] + 35[1/3] + 52[1/2] + 68[2/3] + 80[5/6] + 85[1] + 80[7/6] + 68[4/3] + 52[3/2] + 35[5/3] + 20[11/6] + 10[2] + 4[13/6] + 1[7/3]",
    (3, 7): "1[-3/7] + 4[-2/7] + 10[-1/7] + 20[0] + 35[1/7] + 56[2/7] + 80[3/7] + 104[4/7] + 125[5/7] + 140[6/7] + 146[1] + 140[8/7] + 125[9/7] + 104[10/7] + 80[11/7] + 56[12/7] + 35[13/7] + 20[2] + 10[15/7] + 4[16/7] + 1[17/7]",
    (4, 2): "1[3/2]",
    (4, 3): "1[2/3] + 5[1] + 10[4/3] + 10[5/3] + 5[2] + 1[7/3]",
    (4, 4): "1[1/4] + 5[1/2] + 15[3/4] + 30[1] + 45[5/4] + 51[3/2] + 45[7/4] + 30[2] + 15[9/4] + 5[5/2] + 1[11/4]",
    (4, 5): "1[0] + 5[1/5] + 15[2/5] + 35[3/5] + 65[4/5] + 101[1] + 135[6/5] + 155[7/5] + 155[8/5] + 135[9/5] + 101[2] + 65[11/5] + 35[12/5] + 15[13/5] + 5[14/5] + 1[3]",
    (4, 6): "1[-1/6] + 5[0] + 15[1/6] + 35[1/3] + 70[1/2] + 121[2/3] + 185[5/6] + 255[1] + 320[7/6] + 365[4/3] + 381[3/2] + 365[5/3] + 320[11/6] + 255[2] + 185[13/6] + 121[7/3] + 70[5/2] + 35[8/3] + 15[17/6] + 5[3] + 1[19/6]",
    (4, 7): "1[-2/7] + 5[-1/7] + 15[0] + 35[1/7] + 70[2/7] + 126[3/7] + 205[4/7] + 305[5/7] + 420[6/7] + 540[1] + 651[8/7] + 735[9/7] + 780[10/7] + 780[11/7] + 735[12/7] + 651[13/7] + 540[2] + 420[15/7] + 305[16/7] + 205[17/7] + 126[18/7] + 70[19/7] + 35[20/7] + 15[3] + 5[22/7] + 1[23/7]",
    (5, 2): "1[2]",
    (5, 3): "1[1] + 6[4/3] + 15[5/3] + 20[2] + 15[7/3] + 6[8/3] + 1[3]",
    (5, 4): "1[1/2] + 6[3/4] + 21[1] + 50[5/4] + 90[3/2] + 126[7/4] + 141[2] + 126[9/4] + 90[5/2] + 50[11/4] + 21[3] + 6[13/4] + 1[7/2]",
    (5, 5): "1[1/5] + 6[2/5] + 21[3/5] + 56[4/5] + 120[1] + 216[6/5] + 336[7/5] + 456[8/5] + 546[9/5] + 580[2] + 546[11/5] + 456[12/5] + 336[13/5] + 216[14/5] + 120[3] + 56[16/5] + 21[17/5] + 6[18/5] + 1[19/5]",
    (5, 6): "1[0] + 6[1/6] + 21[1/3] + 56[1/2] + 126[2/3] + 246[5/6] + 426[1] + 666[7/6] + 951[4/3] + 1246[3/2] + 1506[5/3] + 1686[11/6] + 1751[2] + 1686[13/6] + 1506[7/3] + 1246[5/2] + 951[8/3] + 666[17/6] + 426[3] + 246[19/6] + 126[10/3] + 56[7/2] + 21[11/3] + 6[23/6] + 1[4]",
    (5, 7): "1[-1/7] + 6[0] + 21[1/7] + 56[2/7] + 126[3/7] + 252[4/7] + 456[5/7] + 756[6/7] + 1161[1] + 1666[8/7] + 2247[9/7] + 2856[10/7] + 3431[11/7] + 3906[12/7] + 4221[13/7] + 4332[2] + 4221[15/7] + 3906[16/7] + 3431[17/7] + 2856[18/7] + 2247[19/7] + 1666[20/7] + 1161[3] + 756[22/7] + 456[23/7] + 252[24/7] + 126[25/7] + 56[26/7] + 21[27/7] + 6[4] + 1[29/7]",
    (6, 2): "1[5/2]",
    (6, 3): "1[4/3] + 7[5/3] + 21[2] + 35[7/3] + 35[8/3] + 21[3] + 7[10/3] + 1[11/3]",
    (6, 4): "1[3/4] + 7[1] + 28[5/4] + 77[3/2] + 161[7/4] + 266[2] + 357[9/4] + 393[5/2] + 357[11/4] + 266[3] + 161[13/4] + 77[7/2] + 28[15/4] + 7[4] + 1[17/4]",
    (6, 5): "1[2/5] + 7[3/5] + 28[4/5] + 84[1] + 203[6/5] + 413[7/5] + 728[8/5] + 1128[9/5] + 1554[2] + 1918[11/5] + 2128[12/5] + 2128[13/5] + 1918[14/5] + 1554[3] + 1128[16/5] + 728[17/5] + 413[18/5] + 203[19/5] + 84[4] + 28[21/5] + 7[22/5] + 1[23/5]",
    (6, 6): "1[1/6] + 7[1/3] + 28[1/2] + 84[2/3] + 210[5/6] + 455[1] + 875[7/6] + 1520[4/3] + 2415[3/2] + 3535[5/3] + 4795[11/6] + 6055[2] + 7140[13/6] + 7875[7/3] + 8135[5/2] + 7875[8/3] + 7140[17/6] + 6055[3] + 4795[19/6] + 3535[10/3] + 2415[7/2] + 1520[11/3] + 875[23/6] + 210[4] + 84[25/6] + 28[13/3] + 7[9/2] + 1[29/6]",
    (6, 7): "1[0] + 7[1/7] + 28[2/7] + 84[3/7] + 210[4/7] + 462[5/7] + 917[6/7] + 1667[1] + 2807[8/7] + 4417[9/7] + 6538[10/7] + 9142[11/7] + 12117[12/7] + 15267[13/7] + 18327[2] + 20993[15/7] + 22967[16/7] + 24017[17/7] + 24017[18/7] + 22967[19/7] + 20993[20/7] + 18327[3] + 15267[22/7] + 12117[23/7] + 9142[24/7] + 6538[25/7] + 4417[26/7] + 2807[27/7] + 1667[4] + 917[29/7] + 462[30/7] + 210[31/7] + 84[32/7] + 28[33/7] + 7[34/7] + 1[5]",
}

# d -> (naive, eigenvalue, conical); None where the cell is blank
A1_N3 = {
    1: (0, None, None),
    2: (1, None, None),
    3: (6, 5, 4),
    4: (19, 20, 16),
    5: (44, 51, 31),
    6: (85, 104, 68),
    7: (146, 185, 104),
    10: (489, 656, 375),
    20: (4579, 6516, 3400),
    30: (16269, 23576, 11950),
    40: (39559, 57836, 28900),
    50: (78449, 115296, 57125),
    100: (646899, 960596, 468000),
    1000: (664668999, 996005996, 478042500),
}

# d -> (eigenvalue, conical)
A1_N4 = {
    3: (11, 10),
    4: (61, 45),
    5: (205, 135),
    6: (521, 320),
    7: (1111, 651),
    10: (5905, 3195),
    20: (123805, 61465),
    30: (683705, 330310),
    40: (2255605, 1075230),
    50: (5649505, 2671725),
    100: (95099005, 44270325),
}

# d -> (naive, eigenvalue, conical)
E6_N3 = {
    1: (0, None, None),
    2: (0, None, None),
    3: (1, None, None),
    4: (3, 3, 2),
    5: (7, 6, 5),
    6: (14, 13, 11),
    7: (24, 23, 17),
    10: (82, 82, 60),
    20: (763, 815, 570),
    30: (2712, 2947, 2040),
    40: (6593, 7230, 4865),
    50: (13075, 14412, 9706),
    100: (107817, 120075, 79577),
    1000: (110778167, 124500750, 81764819),
}

# d -> (floor(b(d, floor(2d/3)+1) / 7), floor((h^{1,1}_{3,d} - 1) / 6))
E6_SURFACE_COMPARISON = {
    4: (2, 3),
    5: (5, 7),
    6: (11, 14),
    7: (17, 24),
    8: (29, 38),
    9: (45, 56),
}
