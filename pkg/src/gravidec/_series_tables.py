"""Exact Maclaurin coefficients of the kernel special functions.

Each entry maps monomial power -> (numerator, denominator) of the exact
rational coefficient, derived by term-wise integration of the defining
integrals (see :mod:`gravidec.series`, which re-derives these on demand;
the test suite asserts the frozen values match the derivation).
"""

from fractions import Fraction

MACLAURIN = {
    "F": {
        0: Fraction(1, 6),
        2: Fraction(-1, 16),
        4: Fraction(1, 240),
        6: Fraction(-1, 8640),
        8: Fraction(1, 564480),
        10: Fraction(-1, 58060800),
        12: Fraction(1, 8622028800),
        14: Fraction(-1, 1743565824000),
        16: Fraction(1, 460301377536000),
        18: Fraction(-1, 153656968937472000),
        20: Fraction(1, 63255452212592640000),
        22: Fraction(-1, 31472020377773015040000),
        24: Fraction(1, 18613452051997183180800000),
        26: Fraction(-1, 12905326756051380338688000000),
        28: Fraction(1, 10366203716798271257051136000000),
        30: Fraction(-1, 9549102953238878110907105280000000),
    },
    "F_sin": {
        1: Fraction(1, 7),
        3: Fraction(-1, 54),
        5: Fraction(1, 1320),
        7: Fraction(-1, 65520),
        9: Fraction(1, 5443200),
        11: Fraction(-1, 678585600),
        13: Fraction(1, 118313395200),
        15: Fraction(-1, 27461161728000),
        17: Fraction(1, 8180810846208000),
        19: Fraction(-1, 3041127510220800000),
        21: Fraction(1, 1379455438636154880000),
        23: Fraction(-1, 749708485427664322560000),
        25: Fraction(1, 480847511343260565504000000),
        27: Fraction(-1, 359332691863805621305344000000),
        29: Fraction(1, 309461669780889568409026560000000),
        31: Fraction(-1, 304245030204583144255845826560000000),
    },
    "F_th": {
        0: Fraction(2, 945),
        2: Fraction(-1, 225),
        4: Fraction(4, 1485),
        6: Fraction(-2764, 2764125),
        8: Fraction(4, 14175),
        10: Fraction(-3617, 54219375),
        12: Fraction(350936, 25196700375),
        14: Fraction(-1396888, 526773121875),
        16: Fraction(310732, 660860825625),
        18: Fraction(-472728182, 6000759962071875),
        20: Fraction(5263448, 417635308715625),
        22: Fraction(-27142241176, 13988694665429859375),
        24: Fraction(13785346041608, 47668551258212981971875),
        26: Fraction(-7709321041217, 183891038752706832421875),
        28: Fraction(2426059160816, 408887133226606956796875),
        30: Fraction(-421044344848855637968, 512037693434204603033283931640625),
    },
    "G": {
        4: Fraction(1, 288),
        6: Fraction(-1, 9216),
        8: Fraction(1, 614400),
        10: Fraction(-17, 1114767360),
        12: Fraction(31, 312134860800),
        14: Fraction(-1, 2092789923840),
        16: Fraction(5461, 3085190905724928000),
        18: Fraction(-257, 49363054491598848000),
        20: Fraction(73, 5860883295193006080000),
        22: Fraction(-1271, 51429826347496701847142400),
        24: Fraction(60787, 1470893033538405672828272640000),
        26: Fraction(-241, 4082116412836600962298675200000),
        28: Fraction(22369621, 306910656805989574069656055971840000000),
        30: Fraction(-617093, 7856912814233333096183195032879104000000),
        32: Fraction(49981, 670728661024594496349491801075220480000000),
        34: Fraction(-16843009, 268520869393759057495065807790568883879936000000),
    },
    "G_th": {
        4: Fraction(1, 126),
        6: Fraction(-1, 720),
        8: Fraction(1, 5280),
        10: Fraction(-11747, 495331200),
        12: Fraction(31, 10886400),
        14: Fraction(-3617, 10857369600),
        16: Fraction(239557687, 6261144873984000),
        18: Fraction(-44875027, 10356780994560000),
        20: Fraction(5670859, 11686872637440000),
        22: Fraction(-300418759661, 5579130885150670848000),
        24: Fraction(39993651697, 6744004366665646080000),
        26: Fraction(-817660015427, 1260014261222965248000000),
        28: Fraction(38546620788077648821, 545826358941120738762817536000000),
        30: Fraction(-4757368049287722181, 621972223007896275423068160000000),
        32: Fraction(7578553932296531, 9186246227262028004720640000000),
        34: Fraction(-443228355605523696874735357, 4999480902254275333000069053897768960000000),
    },
    "G_coh_I": {
        4: Fraction(1, 1536),
        6: Fraction(-7, 49152),
        8: Fraction(41, 3276800),
        10: Fraction(-3419, 5945425920),
        12: Fraction(3973, 237817036800),
        14: Fraction(-141, 413390602240),
        16: Fraction(85902181, 16454351497199616000),
        18: Fraction(-2351957, 37609946279313408000),
        20: Fraction(56681959, 93774132723088097280000),
        22: Fraction(-101787269, 21099415937434544347545600),
        24: Fraction(36276577741, 1120680406505451941202493440000),
        26: Fraction(-68581085179, 370111888097185153915079884800000),
        28: Fraction(1499293521158161, 1636856836298611061704832298516480000000),
        30: Fraction(-3378190091099, 855174183862131493462116466163712000000),
        32: Fraction(17881708819487, 1192406508488167993510207646355947520000000),
        34: Fraction(-5563370976432751, 110162407956413972305668023708951336976384000000),
    },
    "G_sq_I_cos": {
        4: Fraction(3, 8),
        6: Fraction(-39, 256),
        8: Fraction(729, 51200),
        10: Fraction(-6821, 10321920),
        12: Fraction(55591, 2890137600),
        14: Fraction(-7613, 19377684480),
        16: Fraction(171798901, 28566582460416000),
        18: Fraction(-2532857, 35158870720512000),
        20: Fraction(113363699, 162802313755361280000),
        22: Fraction(-2646467723, 476202095810154646732800),
        24: Fraction(507872027587, 13619379940170422896558080000),
        26: Fraction(-45720722087, 214185120426611778886041600000),
        28: Fraction(157820369470879, 149566596884010513679169617920000000),
        30: Fraction(-25466356023893, 5596091748029439527196007858176000000),
        32: Fraction(107290252866941, 6210450565042541632865664824770560000000),
        34: Fraction(-6289028059582979, 108100188966891730070477378337588117504000000),
    },
    "G_sq_I_sin": {
        5: Fraction(9, 28),
        7: Fraction(-5, 96),
        9: Fraction(37, 11264),
        11: Fraction(-265, 2236416),
        13: Fraction(253, 88473600),
        15: Fraction(-3103, 61766369280),
        17: Fraction(4084337, 6030722963865600),
        19: Fraction(-99599, 13711959580999680),
        21: Fraction(91901, 1444141736342323200),
        23: Fraction(-4191653, 9018979087313534976000),
        25: Fraction(2234653117, 777099024481406209228800000),
        27: Fraction(-54895900259, 3593720342015079061452226560000),
        29: Fraction(41372968083833, 587298170431214617046872699699200000),
        31: Fraction(-11097504533, 38972781816633596707257911869440000),
        33: Fraction(229520929819, 225639207380438363823839033425920000000),
        35: Fraction(-2515753398855869, 777720803956248835784823360817647845376000000),
    },
    "G_coh_II": {
        3: Fraction(1, 3),
        5: Fraction(-11, 160),
        7: Fraction(19, 2800),
        9: Fraction(-247, 725760),
        11: Fraction(1013, 93139200),
        13: Fraction(-1361, 5535129600),
        15: Fraction(16369, 3923023104000),
        17: Fraction(-65519, 1185624760320000),
        19: Fraction(233, 396472919851008),
        21: Fraction(-209711, 40872753737367552000),
        23: Fraction(46091, 1231048416137379840000),
        25: Fraction(-5592397, 24128548956292644864000000),
        27: Fraction(67108837, 54444347252091760803840000000),
        29: Fraction(-20648879, 3627389535893211058274304000000),
        31: Fraction(357913931, 15532028569002743100148285440000000),
        33: Fraction(-4294967263, 52099905712871318973109166407680000000),
    },
    "G_sq_II_cos": {
        3: Fraction(2, 3),
        5: Fraction(-11, 40),
        7: Fraction(19, 700),
        9: Fraction(-247, 181440),
        11: Fraction(1013, 23284800),
        13: Fraction(-1361, 1383782400),
        15: Fraction(16369, 980755776000),
        17: Fraction(-65519, 296406190080000),
        19: Fraction(233, 99118229962752),
        21: Fraction(-209711, 10218188434341888000),
        23: Fraction(46091, 307762104034344960000),
        25: Fraction(-5592397, 6032137239073161216000000),
        27: Fraction(67108837, 13611086813022940200960000000),
        29: Fraction(-20648879, 906847383973302764568576000000),
        31: Fraction(357913931, 3883007142250685775037071360000000),
        33: Fraction(-4294967263, 13024976428217829743277291601920000000),
    },
    "G_sq_II_sin": {
        4: Fraction(4, 7),
        6: Fraction(-13, 135),
        8: Fraction(1, 154),
        10: Fraction(-251, 982800),
        12: Fraction(509, 74844000),
        14: Fraction(-1363, 10291881600),
        16: Fraction(2047, 1035242208000),
        18: Fraction(-851, 36377123328000),
        20: Fraction(14563, 64764752532480000),
        22: Fraction(-29959, 16726201306214400000),
        24: Fraction(1048573, 87250556493736796160000),
        26: Fraction(-5592401, 81218419254663634944000000),
        28: Fraction(565255, 1658540570936323956835078125),
        30: Fraction(-109096864424335377362467183581807105143318528172647867238878370923762612869711939728788535714336023899498227662175248996696, 74114842788232025025594603018147891843164681122546389276306705364284152326009696115122399002266915781758710968470187606528229115446476410031189177),
        32: Fraction(22369621, 3997213234669823591949926400000000),
        34: Fraction(-4294967279, 227575282593028191903372678266880000000),
    },
}
