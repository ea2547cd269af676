"""Embedded atlas data: the classification tables, stored verbatim.

TABLE1    -- 32 semisimple families: (no, basis in P-notation, type, |W_p|, |Gamma_p|).
             Row 27 repeats a basis entry and row 29's |Gamma_p| = 1140 looks
             suspicious; both are stored exactly as printed and flagged by the
             verifiers, never corrected here.
TABLE2    -- 62 nilpotent classes: (no, marks, type, d_original, d_corrected, s0).
             d_corrected is None when the original value stands; six rows carry
             corrections.
NNFORMS   -- 94 orbits: (no, marks, normal-form index sets, orbit dim).  All
             normal-form coefficients are 1.
FAMILY_TABLES -- nilpotent parts of the mixed families 2,3,9,11,12,18,19:
             (no, marks tuple, type).
HASSE_EDGES -- (a, b) meaning orbit a lies in the closure of orbit b.
"""

TABLE1 = (
    (1, "", "E7", 2903040, 1),
    (2, "P(1)+P(3)-P(7)", "E6", 51840, 2),
    (3, "P(1)", "D6", 23040, 2),
    (4, "P(3)-P(7)", "D5+A1", 3840, 2),
    (5, "P(1234567)", "A6", 5040, 2),
    (6, "P(123456)+P(45)", "A5+A1", 1440, 2),
    (7, "P(123456)+P(146)", "A4+A2", 720, 2),
    (8, "P(123456)", "A3+A2+A1", 288, 2),
    (9, "P(1), P(13)-P(7)", "D5", 1920, 4),
    (10, "P(1), P(3)", "D4+A1", 384, 8),
    (11, "P(2), P(13)-P(7)", "A5", 720, 4),
    (12, "P(1), P(26)-P(3)", "A5", 720, 12),
    (13, "P(2345)+P(4), P(156)", "A4+A1", 240, 2),
    (14, "P(1235)+P(1), P(1346)+P(1)", "A3+A2", 144, 4),
    (15, "P(13), P(2456)", "A3+2A1", 96, 4),
    (16, "P(156), P(23)+2P(4)+3P(5)", "2A2+A1", 72, 4),
    (17, "P(123456), P(1)-P(3)", "A2+3A1", 48, 12),
    (18, "P(1), P(3), P(7)", "D4", 192, 48),
    (19, "P(1), P(13)-P(7), P(26)-P(3)", "A4", 120, 12),
    (20, "P(13), P(2456), P(7)", "A3+A1", 48, 8),
    (21, "P(13), P(26), P(45)", "A3+A1", 48, 48),
    (22, "P(1236), P(15)-P(6), P(124)+2P(5)", "2A2", 36, 24),
    (23, "P(5), P(16), P(23)+2P(4)", "A2+2A1", 24, 8),
    (24, "P(1), P(2), P(3)", "4A1", 16, 48),
    (25, "P(1), P(56), P(1236), P(24)", "A3", 24, 96),
    (26, "P(5), P(16), P(246), P(143)-P(5)", "A2+A1", 12, 48),
    (27, "P(1), P(3), P(3), P(6)", "3A1", 8, 1152),
    (28, "P(1), P(2), P(3), P(4)", "3A1", 8, 96),
    (29, "P(1), P(5), P(6), P(24), P(23)", "A2", 6, 1140),
    (30, "P(1), P(2), P(3), P(4), P(5)", "2A1", 4, 768),
    (31, "P(1), P(2), P(3), P(4), P(5), P(6)", "A1", 2, 23040),
    (32, "P(1), P(2), P(3), P(4), P(5), P(6), P(7)", "", 1, 2903040),
)

TABLE2 = (
    (1, "0001000", "A1", 46, None, "2A3"),
    (2, "0100010", "2A1", 37, None, "C2+2A2+T1"),
    (3, "0200000", "3A1", 36, None, "C3+A1"),
    (5, "1001001", "3A1", 31, None, "A2+T2"),
    (6, "0002000", "4A1", 30, None, "A3"),
    (7, "1100100", "4A1", 28, None, "A2+T1"),
    (9, "2000002", "A2", 30, None, "A2+A2+T1"),
    (10, "2010001", "A2+A1", 25, None, "2A1+T2"),
    (12, "0101010", "5A1", 25, None, "2A1"),
    (13, "3000100", "A2+2A1", 22, None, "2A1+T1"),
    (15, "1010101", "A2+2A1", 22, None, "T3"),
    (16, "4000000", "A2+3A1", 21, None, "G2"),
    (18, "2000200", "A2+3A1", 21, None, "2A1"),
    (20, "0102010", "A3", 21, None, "3A1+T1"),
    (21, "2200022", "A4", 13, None, "A1+T2"),
    (22, "1211121", "A5", 7, 9, "T2"),
    (23, "0202040", "A5", 12, None, "2A1"),
    (25, "2220222", "A6", 6, None, "T1"),
    (26, "2222222", "A7", 4, None, "0"),
    (27, "0200020", "A2+A2", 21, None, "2A1+T1"),
    (28, "1030010", "A2+A3", 14, None, "T2"),
    (30, "0040040", "E7(c2)", 7, None, "0"),
    (32, "2020202", "A2+A4", 10, None, "T1"),
    (33, "0202020", "A3+A3", 13, None, "A1"),
    (34, "0002020", "A3+A1", 20, None, "3A1"),
    (36, "1011101", "A3+A1", 14, 17, "T3"),
    (37, "3101021", "A4+A1", 11, None, "T2"),
    (39, "2202022", "A5+A1", 8, None, "T1"),
    (40, "1311111", "A5+A1", 8, 9, "T1"),
    (42, "0220220", "E6(b)", 8, None, "T1"),
    (43, "1101011", "2A2+A1", 15, 18, "T2"),
    (44, "0020200", "D4(a1)", 16, None, "T3"),
    (45, "2020020", "A3+A2+A1", 13, None, "T1"),
    (47, "0040000", "A3+A2+A1", 13, None, "A1"),
    (49, "1111111", "2A3+A1", 10, 11, "0"),
    (50, "2004002", "D4", 15, None, "A2+T1"),
    (51, "2204022", "D5", 7, None, "T2"),
    (52, "1313143", "D6", 4, None, "T1"),
    (54, "0202202", "D5(a1)+A1", 9, None, "T1"),
    (56, "0004004", "D5(a1)+A1", 9, None, "T1"),
    (58, "1013012", "D4+A1", 12, None, "A1+T1"),
    (60, "1112111", "D4+2A1", 10, None, "T1"),
    (61, "0103103", "D5(a1)", 10, None, "T2"),
    (63, "3113121", "D5+A1", 6, None, "T1"),
    (65, "0404044", "E7(b)", 3, None, "0"),
    (67, "2422222", "D6+A1", 3, None, "0"),
    (69, "4224224", "E6", 3, None, "T1"),
    (70, "3013131", "D6(a1)", 6, None, "T1"),
    (72, "1110111", "D4(a1)+2A1", 11, 14, "T1"),
    (73, "1010210", "D4(a1)+A1", 15, None, "T2"),
    (75, "2022222", "D6(a1)+A1", 5, None, "0"),
    (77, "4004040", "E7(c1)", 5, None, "0"),
    (79, "4220224", "E6(a1)", 4, None, "T1"),
    (80, "1030131", "D6(a2)", 8, None, "T1"),
    (82, "2020222", "D6(a2)+A1", 7, None, "0"),
    (83, "4444044", "E7(a1)", 1, None, "0"),
    (86, "4404404", "E7(a2)", 2, None, "0"),
    (88, "4444448", "E7", 0, None, "0"),
    (90, "0101111", "A3+2A1", 16, None, "T2"),
    (92, "2002002", "A3+2A1", 16, None, "A1+T1"),
    (93, "2101101", "A3+3A1", 15, None, "A1"),
    (94, "1011012", "A3+3A1", 15, None, "A1"),
)

NNFORMS = (
    (1, "0001000", ((1, 2, 3, 4),), 17),
    (2, "0100010", ((1, 2, 3, 4), (1, 2, 5, 6)), 26),
    (3, "0200000", ((1, 2, 3, 4), (1, 2, 5, 6), (1, 2, 7, 8)), 27),
    (4, "0000020", ((1, 2, 3, 4), (1, 2, 5, 6), (3, 4, 5, 6)), 27),
    (5, "1001001", ((1, 2, 3, 5), (1, 2, 4, 6), (1, 3, 4, 7)), 32),
    (6, "0002000", ((1, 2, 3, 5), (1, 2, 4, 6), (1, 3, 4, 7), (2, 3, 4, 8)), 33),
    (7, "1100100", ((1, 3, 4, 5), (1, 2, 3, 6), (1, 2, 4, 7), (1, 2, 5, 8)), 35),
    (8, "0010011", ((1, 2, 4, 5), (1, 3, 4, 6), (2, 3, 5, 6), (1, 2, 3, 7)), 35),
    (9, "2000002", ((1, 2, 3, 4), (1, 5, 6, 7)), 33),
    (10, "2010001", ((1, 2, 4, 5), (1, 3, 6, 7), (1, 2, 3, 8)), 38),
    (11, "1000102", ((2, 3, 4, 5), (1, 2, 3, 6), (1, 4, 5, 7)), 38),
    (12, "0101010", ((1, 3, 4, 5), (2, 3, 4, 6), (1, 2, 5, 6), (1, 2, 3, 7), (1, 2, 4, 8)), 38),
    (13, "3000100", ((1, 2, 4, 6), (1, 3, 5, 7), (1, 2, 3, 8), (1, 4, 5, 8)), 41),
    (14, "0010003", ((1, 2, 4, 5), (1, 3, 4, 6), (1, 3, 5, 7), (2, 3, 6, 7)), 41),
    (15, "1010101", ((2, 3, 4, 5), (1, 2, 4, 6), (1, 3, 5, 7), (1, 2, 3, 8)), 41),
    (16, "4000000", ((1, 2, 4, 6), (1, 3, 5, 7), (1, 2, 3, 8), (1, 4, 5, 8), (1, 6, 7, 8)), 42),
    (17, "0000004", ((1, 2, 3, 4), (1, 2, 5, 6), (1, 3, 5, 7), (2, 3, 6, 7), (4, 5, 6, 7)), 42),
    (18, "2000200", ((2, 3, 4, 5), (1, 2, 4, 6), (1, 3, 5, 7), (1, 2, 3, 8), (1, 4, 5, 8)), 42),
    (19, "0020002", ((1, 2, 4, 5), (1, 3, 4, 6), (1, 3, 5, 7), (2, 3, 6, 7), (1, 2, 3, 8)), 42),
    (20, "0102010", ((1, 2, 5, 6), (1, 3, 4, 7), (2, 3, 4, 8)), 42),
    (21, "2200022", ((2, 3, 4, 5), (1, 3, 4, 7), (1, 5, 6, 7), (1, 2, 6, 8)), 50),
    (22, "1211121", ((2, 4, 5, 6), (2, 3, 4, 7), (1, 3, 5, 7), (1, 3, 4, 8), (1, 2, 6, 8)), 54),
    (23, "0202040", ((3, 4, 5, 6), (1, 3, 4, 7), (1, 2, 5, 7), (2, 3, 4, 8), (1, 2, 6, 8)), 51),
    (24, "0402020", ((1, 3, 5, 6), (2, 4, 5, 6), (1, 3, 4, 7), (2, 3, 4, 8), (1, 2, 7, 8)), 51),
    (25, "2220222", ((2, 4, 5, 6), (2, 3, 4, 7), (1, 4, 5, 7), (1, 3, 6, 7), (1, 3, 5, 8), (1, 2, 6, 8)), 57),
    (26, "2222222", ((2, 4, 5, 6), (2, 3, 5, 7), (1, 4, 5, 7), (1, 3, 6, 7), (2, 3, 4, 8), (1, 3, 5, 8), (1, 2, 6, 8)), 59),
    (27, "0200020", ((1, 3, 4, 5), (2, 3, 4, 6), (1, 2, 5, 7), (1, 2, 6, 8)), 42),
    (28, "1030010", ((2, 3, 4, 5), (1, 3, 4, 7), (1, 2, 6, 7), (1, 2, 5, 8), (1, 3, 6, 8)), 49),
    (29, "0100301", ((2, 3, 4, 6), (1, 3, 5, 6), (1, 3, 4, 7), (2, 4, 5, 7), (1, 2, 5, 8)), 49),
    (30, "0040040", ((3, 4, 5, 6), (1, 2, 4, 7), (1, 3, 5, 7), (2, 3, 5, 8), (1, 2, 6, 8), (1, 3, 6, 8), (2, 3, 6, 8)), 56),
    (31, "0400400", ((1, 3, 4, 6), (2, 3, 5, 7), (1, 2, 6, 7), (1, 4, 5, 8), (2, 4, 5, 8), (1, 2, 6, 8), (1, 2, 7, 8)), 56),
    (32, "2020202", ((2, 3, 5, 6), (2, 3, 4, 7), (1, 4, 5, 7), (1, 3, 6, 7), (1, 2, 4, 8), (1, 3, 5, 8)), 53),
    (33, "0202020", ((1, 3, 5, 6), (2, 4, 5, 6), (1, 3, 4, 7), (1, 2, 5, 7), (2, 3, 4, 8), (1, 2, 6, 8)), 50),
    (34, "0002020", ((1, 2, 5, 6), (3, 4, 5, 6), (1, 3, 4, 7), (2, 3, 4, 8)), 43),
    (35, "0202000", ((1, 2, 5, 6), (1, 3, 4, 7), (2, 3, 4, 8), (1, 2, 7, 8)), 43),
    (36, "1011101", ((1, 2, 5, 6), (2, 3, 4, 7), (1, 3, 5, 7), (1, 3, 4, 8)), 46),
    (37, "3101021", ((2, 3, 4, 5), (1, 3, 5, 7), (1, 4, 6, 7), (1, 3, 4, 8), (1, 2, 6, 8)), 52),
    (38, "1201013", ((2, 3, 5, 6), (2, 3, 4, 7), (1, 3, 5, 7), (1, 4, 6, 7), (1, 2, 4, 8)), 52),
    (39, "2202022", ((2, 4, 5, 6), (2, 3, 4, 7), (1, 3, 5, 7), (1, 4, 6, 7), (1, 3, 4, 8), (1, 2, 6, 8)), 55),
    (40, "1311111", ((2, 3, 5, 6), (1, 4, 5, 6), (2, 3, 4, 7), (1, 3, 5, 7), (1, 3, 4, 8), (1, 2, 7, 8)), 54),
    (41, "1111131", ((3, 4, 5, 6), (2, 3, 4, 7), (1, 3, 5, 7), (1, 2, 6, 7), (1, 3, 4, 8), (1, 2, 5, 8)), 54),
    (42, "0220220", ((1, 4, 5, 6), (2, 3, 4, 7), (1, 2, 6, 7), (1, 3, 5, 8), (2, 3, 5, 8), (1, 2, 6, 8)), 55),
    (43, "1101011", ((2, 3, 4, 5), (1, 3, 5, 6), (1, 3, 4, 7), (1, 2, 6, 7), (1, 2, 4, 8)), 45),
    (44, "0020200", ((1, 2, 4, 6), (1, 3, 5, 7), (2, 3, 4, 8), (2, 3, 5, 8)), 47),
    (45, "2020020", ((2, 3, 4, 5), (1, 4, 5, 6), (1, 3, 4, 7), (1, 2, 6, 7), (1, 2, 5, 8), (1, 3, 6, 8)), 50),
    (46, "0200202", ((2, 3, 4, 6), (1, 3, 5, 6), (1, 3, 4, 7), (2, 4, 5, 7), (1, 2, 6, 7), (1, 2, 5, 8)), 50),
    (47, "0040000", ((2, 3, 4, 5), (1, 3, 4, 7), (1, 2, 6, 7), (1, 2, 5, 8), (1, 3, 6, 8), (2, 3, 7, 8)), 50),
    (48, "0000400", ((1, 2, 3, 6), (1, 4, 5, 6), (1, 3, 4, 7), (2, 4, 5, 7), (1, 2, 5, 8), (3, 4, 5, 8)), 50),
    (49, "1111111", ((2, 3, 5, 6), (1, 4, 5, 6), (2, 3, 4, 7), (1, 3, 5, 7), (1, 2, 6, 7), (1, 3, 4, 8), (1, 2, 5, 8)), 52),
    (50, "2004002", ((1, 2, 5, 6), (1, 3, 5, 7), (1, 4, 6, 7), (2, 3, 4, 8)), 48),
    (51, "2204022", ((2, 4, 5, 6), (1, 3, 5, 7), (1, 4, 6, 7), (2, 3, 4, 8), (1, 2, 6, 8)), 56),
    (52, "1313143", ((3, 4, 5, 6), (2, 3, 5, 7), (1, 4, 5, 7), (1, 3, 6, 7), (2, 3, 4, 8), (1, 2, 6, 8)), 59),
    (53, "3413131", ((2, 4, 5, 6), (1, 4, 5, 7), (1, 3, 6, 7), (2, 3, 4, 8), (1, 3, 5, 8), (1, 2, 7, 8)), 59),
    (54, "0202202", ((1, 3, 5, 6), (2, 4, 5, 7), (1, 2, 6, 7), (1, 3, 4, 8), (2, 3, 4, 8), (1, 2, 5, 8)), 54),
    (55, "2022020", ((2, 3, 5, 6), (1, 4, 5, 6), (2, 3, 4, 7), (1, 3, 6, 7), (1, 2, 5, 8), (1, 3, 6, 8)), 54),
    (56, "0004004", ((1, 3, 5, 6), (2, 4, 5, 7), (1, 2, 6, 7), (3, 4, 6, 7), (1, 3, 4, 8), (2, 3, 4, 8)), 54),
    (57, "4004000", ((2, 3, 4, 6), (1, 2, 5, 7), (1, 3, 6, 7), (1, 3, 5, 8), (1, 4, 6, 8), (1, 4, 7, 8)), 54),
    (58, "1013012", ((2, 3, 5, 6), (1, 4, 5, 6), (1, 2, 5, 7), (1, 3, 6, 7), (2, 3, 4, 8)), 51),
    (59, "2103101", ((1, 3, 5, 6), (1, 4, 5, 7), (1, 2, 6, 7), (2, 3, 4, 8), (1, 2, 5, 8)), 51),
    (60, "1112111", ((2, 3, 5, 6), (1, 4, 5, 6), (1, 3, 5, 7), (1, 2, 6, 7), (2, 3, 4, 8), (1, 2, 5, 8)), 53),
    (61, "0103103", ((1, 3, 5, 6), (2, 4, 5, 7), (1, 2, 6, 7), (1, 3, 4, 8), (2, 3, 4, 8)), 53),
    (62, "3013010", ((1, 4, 5, 6), (2, 3, 4, 7), (1, 3, 6, 7), (1, 2, 5, 8), (1, 3, 6, 8)), 53),
    (63, "3113121", ((2, 3, 5, 6), (1, 4, 5, 7), (1, 3, 6, 7), (2, 3, 4, 8), (1, 3, 5, 8), (1, 2, 6, 8)), 57),
    (64, "1213113", ((2, 4, 5, 6), (2, 3, 5, 7), (1, 4, 5, 7), (1, 3, 6, 7), (2, 3, 4, 8), (1, 2, 5, 8)), 57),
    (65, "0404044", ((3, 4, 5, 6), (1, 3, 5, 7), (2, 4, 6, 7), (1, 3, 4, 8), (2, 3, 4, 8), (1, 2, 5, 8), (1, 2, 6, 8)), 60),
    (66, "4404040", ((2, 3, 5, 6), (2, 3, 4, 7), (1, 4, 5, 7), (1, 4, 5, 8), (1, 3, 6, 8), (1, 4, 6, 8), (1, 2, 7, 8)), 60),
    (67, "2422222", ((2, 4, 5, 6), (2, 3, 5, 7), (1, 4, 5, 7), (1, 3, 6, 7), (2, 3, 4, 8), (1, 3, 5, 8), (1, 2, 7, 8)), 60),
    (68, "2222242", ((3, 4, 5, 6), (2, 3, 5, 7), (1, 4, 5, 7), (1, 3, 6, 7), (2, 3, 4, 8), (1, 3, 5, 8), (1, 2, 6, 8)), 60),
    (69, "4224224", ((2, 4, 5, 6), (2, 3, 5, 7), (1, 4, 6, 7), (2, 3, 4, 8), (1, 3, 5, 8), (1, 2, 6, 8)), 60),
    (70, "3013131", ((2, 4, 5, 6), (1, 4, 5, 7), (1, 3, 6, 7), (2, 3, 4, 8), (1, 2, 5, 8), (1, 3, 5, 8)), 57),
    (71, "1313103", ((2, 3, 5, 6), (1, 4, 5, 7), (1, 3, 6, 7), (2, 3, 4, 8), (1, 2, 6, 8), (1, 2, 7, 8)), 57),
    (72, "1110111", ((2, 3, 4, 6), (1, 4, 5, 6), (1, 3, 5, 7), (1, 2, 6, 7), (1, 2, 4, 8), (1, 2, 5, 8)), 49),
    (73, "1010210", ((2, 3, 4, 6), (1, 4, 5, 6), (1, 2, 5, 7), (1, 3, 4, 8), (1, 3, 5, 8)), 48),
    (74, "0120101", ((1, 3, 4, 6), (2, 3, 5, 7), (1, 2, 6, 7), (1, 2, 4, 8), (1, 2, 5, 8)), 48),
    (75, "2022222", ((2, 4, 5, 6), (2, 3, 5, 7), (1, 4, 5, 7), (1, 3, 6, 7), (2, 3, 4, 8), (1, 2, 5, 8), (1, 3, 5, 8)), 58),
    (76, "2222202", ((2, 3, 5, 6), (1, 4, 5, 7), (1, 3, 6, 7), (2, 3, 4, 8), (1, 3, 5, 8), (1, 2, 6, 8), (1, 2, 7, 8)), 58),
    (77, "4004040", ((2, 4, 5, 6), (1, 3, 5, 7), (1, 2, 6, 7), (2, 3, 4, 8), (1, 4, 5, 8), (1, 3, 6, 8), (1, 4, 6, 8)), 58),
    (78, "0404004", ((2, 3, 5, 6), (1, 4, 5, 7), (1, 3, 6, 7), (2, 4, 6, 7), (2, 3, 4, 8), (1, 2, 6, 8), (1, 2, 7, 8)), 58),
    (79, "4220224", ((2, 4, 5, 6), (2, 3, 4, 7), (1, 5, 6, 7), (1, 3, 4, 8), (1, 3, 5, 8), (1, 2, 6, 8)), 59),
    (80, "1030131", ((2, 4, 5, 6), (2, 3, 4, 7), (1, 3, 6, 7), (1, 3, 4, 8), (1, 2, 5, 8), (1, 3, 5, 8)), 55),
    (81, "1310301", ((2, 3, 4, 6), (2, 3, 5, 7), (1, 4, 5, 7), (1, 3, 5, 8), (1, 2, 6, 8), (1, 2, 7, 8)), 55),
    (82, "2020222", ((2, 4, 5, 6), (2, 3, 4, 7), (1, 4, 5, 7), (1, 3, 6, 7), (1, 3, 4, 8), (1, 2, 5, 8), (1, 3, 5, 8)), 56),
    (83, "4444044", ((2, 4, 5, 6), (2, 3, 5, 7), (1, 4, 6, 7), (2, 3, 4, 8), (1, 3, 5, 8), (1, 3, 6, 8), (1, 2, 7, 8)), 62),
    (84, "4404444", ((3, 4, 5, 6), (2, 3, 5, 7), (1, 4, 6, 7), (2, 3, 4, 8), (1, 3, 5, 8), (1, 4, 5, 8), (1, 2, 6, 8)), 62),
    (85, "2220202", ((2, 3, 4, 6), (2, 3, 5, 7), (1, 4, 5, 7), (1, 3, 6, 7), (1, 3, 5, 8), (1, 2, 6, 8), (1, 2, 7, 8)), 56),
    (86, "4404404", ((2, 3, 5, 6), (2, 4, 5, 7), (1, 3, 6, 7), (2, 3, 4, 8), (1, 4, 5, 8), (1, 2, 6, 8), (1, 2, 7, 8)), 61),
    (87, "4044044", ((2, 4, 5, 6), (2, 3, 5, 7), (1, 4, 6, 7), (2, 3, 4, 8), (1, 3, 5, 8), (1, 2, 6, 8), (1, 3, 6, 8)), 61),
    (88, "4444448", ((3, 4, 5, 6), (2, 4, 5, 7), (2, 3, 6, 7), (1, 4, 6, 7), (2, 3, 4, 8), (1, 3, 5, 8), (1, 2, 6, 8)), 63),
    (89, "8444444", ((2, 4, 5, 6), (2, 3, 5, 7), (1, 4, 6, 7), (2, 3, 4, 8), (1, 4, 5, 8), (1, 3, 6, 8), (1, 2, 7, 8)), 63),
    (90, "0101111", ((1, 3, 5, 6), (2, 4, 5, 6), (2, 3, 4, 7), (1, 2, 5, 7), (1, 2, 4, 8)), 47),
    (91, "1111010", ((2, 3, 4, 6), (1, 3, 5, 6), (1, 2, 5, 7), (1, 3, 4, 8), (1, 2, 6, 8)), 47),
    (92, "2002002", ((1, 2, 5, 6), (2, 3, 4, 7), (1, 3, 5, 7), (1, 4, 6, 7), (1, 3, 4, 8)), 47),
    (93, "2101101", ((2, 3, 4, 5), (1, 3, 5, 6), (1, 4, 5, 7), (1, 2, 6, 7), (1, 3, 4, 8), (1, 2, 5, 8)), 48),
    (94, "1011012", ((2, 3, 5, 6), (1, 4, 5, 6), (2, 3, 4, 7), (1, 2, 5, 7), (1, 3, 6, 7), (1, 2, 3, 8)), 48),
)

FAMILY_TABLES = {
    2: (
        (1, (0, 0, 0, 1), "A1"), (2, (0, 1, 0, 0), "A1"), (3, (1, 0, 0, 1), "2A1"),
        (4, (0, 0, 0, 2), "2A1"), (5, (2, 0, 0, 0), "A2"), (6, (0, 1, 0, 1), "3A1"),
        (7, (1, 0, 1, 0), "A2+A1"), (8, (0, 2, 0, 0), "A2"), (9, (0, 1, 0, 2), "C2"),
        (10, (0, 2, 0, 2), "A3"), (11, (0, 0, 2, 0), "F4(e3)"), (12, (1, 1, 0, 1), "A2+A1"),
        (13, (1, 1, 1, 1), "A3+A1"), (14, (2, 0, 0, 4), "B3"), (15, (1, 2, 1, 1), "C3"),
        (16, (2, 2, 2, 2), "C4"), (17, (2, 2, 0, 4), "F4(e1)"), (18, (1, 0, 1, 1), "C(1,2)"),
        (19, (2, 0, 0, 2), "C2+A1"), (20, (0, 2, 2, 0), "F4(e2)"), (21, (2, 2, 0, 2), "C3+A1"),
        (22, (1, 1, 1, 2), "B3+A1"), (23, (4, 2, 2, 4), "F4"),
    ),
    3: (
        (1, (0, 1, 0, 0, 1, 0), "A1"), (2, (0, 2, 0, 0, 0, 0), "2A1"),
        (3, (1, 0, 1, 1, 0, 1), "2A1"), (4, (1, 1, 1, 0, 1, 0), "3A1"),
        (5, (2, 0, 0, 2, 0, 0), "3A1"), (7, (2, 0, 0, 0, 0, 2), "3A1"),
        (8, (2, 1, 0, 1, 0, 1), "4A1"), (10, (2, 0, 2, 0, 0, 0), "A2"),
        (11, (0, 2, 0, 0, 2, 0), "4A1"), (12, (3, 0, 1, 0, 1, 0), "A2+A1"),
        (14, (1, 1, 1, 1, 1, 1), "5A1"), (15, (4, 0, 0, 0, 0, 0), "A2+2A1"),
        (17, (2, 0, 2, 0, 2, 0), "A2+2A1"), (18, (2, 0, 2, 2, 0, 2), "A2+A2"),
        (19, (0, 4, 0, 4, 0, 0), "A3+A2"), (21, (0, 4, 0, 0, 2, 0), "A3"),
        (22, (1, 2, 1, 1, 2, 1), "A3"), (23, (4, 0, 4, 2, 0, 2), "A4"),
        (24, (2, 2, 4, 4, 2, 2), "A5"), (25, (2, 2, 4, 2, 2, 4), "A5"),
        (27, (2, 2, 2, 2, 2, 2), "2A3"), (28, (0, 4, 0, 2, 4, 2), "D4"),
        (29, (4, 4, 4, 2, 4, 2), "D5"), (30, (4, 4, 4, 8, 4, 4), "D6"),
        (32, (1, 3, 1, 1, 1, 1), "A3+A1"), (33, (2, 2, 0, 0, 2, 2), "A3+A1"),
        (34, (2, 2, 0, 2, 2, 0), "A3+A1"), (36, (1, 3, 1, 3, 4, 1), "D4+A1"),
        (38, (2, 2, 2, 2, 4, 2), "D4+2A1"), (39, (0, 4, 0, 4, 4, 0), "D5(a1)"),
        (41, (2, 2, 2, 0, 2, 0), "A3+2A1"), (42, (0, 4, 0, 2, 0, 2), "D4(a1)"),
        (43, (3, 1, 1, 1, 2, 1), "A3+2A1"), (45, (0, 4, 4, 4, 4, 4), "D6(a1)"),
        (47, (0, 4, 4, 4, 0, 4), "D6(a2)"), (49, (1, 0, 3, 1, 3, 1), "D4(a1)+A1"),
        (51, (2, 0, 2, 2, 2, 2), "D4(a1)+2A1"),
    ),
    9: (
        (1, (0, 1, 0, 1), "A1"), (2, (0, 2, 0, 0), "A1"), (3, (1, 0, 1, 0), "2A1"),
        (4, (1, 1, 0, 1), "2A1"), (5, (0, 2, 0, 2), "2A1"), (6, (2, 0, 0, 0), "A2"),
        (7, (1, 1, 1, 1), "3A1"), (8, (2, 0, 0, 2), "A2+A1"), (9, (0, 4, 0, 2), "C2"),
        (10, (1, 2, 1, 2), "A3"), (11, (0, 4, 2, 0), "B(0,1,2)"), (12, (2, 4, 0, 4), "B3"),
        (13, (2, 4, 4, 4), "B4"), (14, (1, 1, 1, 3), "C2+A1"), (15, (0, 2, 2, 2), "C2+A1"),
        (16, (2, 2, 2, 2), "C2+C2"), (17, (2, 4, 2, 2), "B3+A1"),
    ),
    11: (
        (1, (0, 1, 0), "A1"), (2, (1, 0, 1), "A1"), (3, (2, 0, 0), "2A1"),
        (4, (0, 2, 0), "2A1"), (5, (1, 1, 1), "3A1"), (6, (2, 0, 2), "A2"),
        (7, (2, 2, 2), "A3"), (8, (1, 2, 1), "C2"), (9, (0, 2, 2), "C2+A1"),
        (10, (2, 2, 4), "C3"),
    ),
    12: (
        (1, (0, 1, 0), "A1"), (2, (1, 0, 1), "A1"), (3, (2, 0, 0), "2A1"),
        (4, (0, 0, 2), "2A1"), (5, (1, 1, 1), "3A1"), (6, (0, 2, 0), "2A1"),
        (7, (2, 0, 2), "A2"), (8, (2, 2, 2), "A3"), (9, (1, 2, 1), "C2"),
        (10, (0, 2, 2), "C2+A1"), (11, (2, 2, 4), "C2+A1"), (12, (2, 2, 4), "C3"),
        (13, (4, 2, 2), "C3"),
    ),
    18: (
        (1, (1, 1, 1, 1), "A1"), (2, (2, 2, 0, 0), "2A1"), (3, (2, 0, 2, 0), "2A1"),
        (4, (2, 0, 0, 2), "2A1"), (5, (3, 1, 1, 1), "3A1"), (6, (2, 2, 2, 2), "4A1"),
        (7, (4, 0, 0, 0), "A2"), (8, (4, 2, 2, 4), "A3"), (9, (4, 2, 4, 2), "A3"),
        (10, (4, 4, 2, 2), "A3"), (11, (4, 8, 4, 4), "D4"), (12, (0, 4, 4, 4), "D4(a1)"),
    ),
    19: (
        (1, (0, 1), "A1"), (2, (1, 0), "A1"), (3, (0, 2), "A1"),
        (4, (1, 1), "2A1"), (5, (1, 2), "C2"), (6, (2, 2), "C2"),
    ),
}

HASSE_EDGES = (
    (83, 89), (83, 88), (84, 89), (84, 88), (86, 83), (86, 84), (87, 83), (87, 84),
    (69, 86), (69, 87), (66, 86), (67, 86), (67, 87), (68, 86), (68, 87), (65, 87),
    (53, 66), (53, 67), (79, 69), (79, 66), (79, 65), (52, 68), (52, 65), (26, 69),
    (26, 67), (26, 68), (77, 53), (77, 79), (77, 52), (77, 26), (78, 53), (78, 79),
    (78, 52), (78, 26), (76, 53), (76, 26), (75, 52), (75, 26), (25, 77), (25, 78),
    (71, 78), (71, 76), (70, 77), (70, 75), (64, 78), (64, 75), (63, 77), (63, 76),
    (51, 71), (51, 70), (51, 64), (51, 63), (85, 25), (85, 71), (85, 63), (82, 25),
    (82, 70), (82, 64), (30, 25), (30, 71), (30, 70), (30, 64), (31, 25), (31, 71),
    (31, 70), (31, 63), (39, 51), (39, 85), (39, 82), (81, 85), (81, 31), (42, 51),
    (42, 30), (42, 31), (80, 82), (80, 30), (57, 85), (56, 82), (55, 81), (55, 42),
    (22, 39), (22, 81), (22, 42), (22, 80), (41, 80), (40, 81), (54, 42), (54, 80),
    (60, 55), (60, 54), (61, 56), (61, 54), (62, 57), (62, 55), (32, 55), (32, 22),
    (32, 41), (32, 40), (32, 54), (49, 60), (49, 32), (37, 62), (37, 32), (38, 61),
    (38, 32), (23, 41), (58, 60), (58, 61), (59, 60), (59, 62), (24, 40), (21, 37),
    (21, 38), (21, 23), (21, 24), (47, 49), (33, 49), (33, 23), (33, 24), (48, 49),
    (46, 49), (46, 38), (46, 58), (45, 49), (45, 37), (45, 59), (28, 47), (28, 33),
    (28, 45), (29, 33), (29, 48), (29, 46), (72, 21), (72, 33), (72, 46), (72, 45),
    (94, 46), (73, 29), (73, 72), (93, 45), (50, 58), (50, 59), (74, 28), (74, 72),
    (91, 93), (91, 74), (92, 72), (92, 94), (92, 93), (92, 50), (44, 73), (44, 50),
    (44, 74), (90, 94), (90, 73), (36, 91), (36, 92), (36, 44), (36, 90), (43, 36),
    (35, 91), (34, 90), (16, 93), (18, 43), (17, 94), (20, 36), (20, 35), (20, 34),
    (27, 43), (27, 35), (27, 34), (19, 43), (13, 16), (13, 18), (15, 18), (15, 20),
    (15, 27), (15, 19), (14, 17), (14, 19), (11, 15), (11, 14), (10, 13), (10, 15),
    (12, 15), (7, 10), (7, 12), (8, 11), (8, 12), (9, 11), (9, 10), (6, 12),
    (5, 7), (5, 8), (5, 9), (5, 6), (3, 7), (4, 8), (2, 5), (2, 3), (2, 4), (1, 2),
)
