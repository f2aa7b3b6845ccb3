// Stencil fits as printed in the reference text, one row per Legendre mode.
// Numerators are listed by ascending offset.
use afdweno::legendre::StencilId;

pub struct ClosedForm {
    pub id: StencilId,
    pub offsets: &'static [i32],
    pub rows: &'static [(&'static [i64], i64)],
}

pub const CLOSED_FORMS: &[ClosedForm] = &[
    ClosedForm {
        id: StencilId::CenterL3,
        offsets: &[-2, -1, 0],
        rows: &[
            (&[1, -2, 25], 24),
            (&[1, -4, 3], 2),
            (&[1, -2, 1], 2),
        ],
    },
    ClosedForm {
        id: StencilId::CenterC3,
        offsets: &[-1, 0, 1],
        rows: &[
            (&[1, 22, 1], 24),
            (&[-1, 0, 1], 2),
            (&[1, -2, 1], 2),
        ],
    },
    ClosedForm {
        id: StencilId::CenterR3,
        offsets: &[0, 1, 2],
        rows: &[
            (&[25, -2, 1], 24),
            (&[-3, 4, -1], 2),
            (&[1, -2, 1], 2),
        ],
    },
    ClosedForm {
        id: StencilId::Center5,
        offsets: &[-2, -1, 0, 1, 2],
        rows: &[
            (&[-17, 308, 5178, 308, -17], 5760),
            (&[17, -154, 0, 154, -17], 240),
            (&[-11, 212, -402, 212, -11], 336),
            (&[-1, 2, 0, -2, 1], 12),
            (&[1, -4, 6, -4, 1], 24),
        ],
    },
    ClosedForm {
        id: StencilId::Center7,
        offsets: &[-3, -2, -1, 0, 1, 2, 3],
        rows: &[
            (&[367, -5058, 57249, 862564, 57249, -5058, 367], 967680),
            (&[-367, 3372, -19083, 0, 19083, -3372, 367], 26880),
            (&[111, -1546, 18625, -34380, 18625, -1546, 111], 26880),
            (&[17, -140, 229, 0, -229, 140, -17], 864),
            (&[-41, 510, -1671, 2404, -1671, 510, -41], 6336),
            (&[-1, 4, -5, 0, 5, -4, 1], 240),
            (&[1, -6, 15, -20, 15, -6, 1], 720),
        ],
    },
    ClosedForm {
        id: StencilId::Center9,
        offsets: &[-4, -3, -2, -1, 0, 1, 2, 3, 4],
        rows: &[
            (&[-27859, 399032, -3207892, 29039624, 412080590, 29039624, -3207892, 399032, -27859], 464486400),
            (&[27859, -299274, 1603946, -7259906, 0, 7259906, -1603946, 299274, -27859], 9676800),
            (&[-13789, 198224, -1610524, 15523184, -28194190, 15523184, -1610524, 198224, -13789], 21288960),
            (&[-10223, 106218, -512722, 747682, 0, -747682, 512722, -106218, 10223], 2280960),
            (&[7243, -100584, 733204, -2143448, 3007170, -2143448, 733204, -100584, 7243], 6589440),
            (&[101, -918, 2662, -2974, 0, 2974, -2662, 918, -101], 74880),
            (&[-29, 352, -1532, 3424, -4430, 3424, -1532, 352, -29], 86400),
            (&[-1, 6, -14, 14, 0, -14, 14, -6, 1], 10080),
            (&[1, -8, 28, -56, 70, -56, 28, -8, 1], 40320),
        ],
    },
    ClosedForm {
        id: StencilId::BoundaryL3,
        offsets: &[-1, 0, 1],
        rows: &[
            (&[-1, 8, 5], 12),
            (&[0, -1, 1], 1),
            (&[1, -2, 1], 2),
        ],
    },
    ClosedForm {
        id: StencilId::BoundaryR3,
        offsets: &[0, 1, 2],
        rows: &[
            (&[5, 8, -1], 12),
            (&[-1, 1, 0], 1),
            (&[1, -2, 1], 2),
        ],
    },
    ClosedForm {
        id: StencilId::BoundaryC4,
        offsets: &[-1, 0, 1, 2],
        rows: &[
            (&[-1, 13, 13, -1], 24),
            (&[1, -63, 63, -1], 60),
            (&[1, -1, -1, 1], 4),
            (&[-1, 3, -3, 1], 6),
        ],
    },
    ClosedForm {
        id: StencilId::BoundaryC6,
        offsets: &[-2, -1, 0, 1, 2, 3],
        rows: &[
            (&[11, -93, 802, 802, -93, 11], 1440),
            (&[-3, 43, -1794, 1794, -43, 3], 1680),
            (&[-4, 33, -29, -29, 33, -4], 84),
            (&[1, -14, 37, -37, 14, -1], 54),
            (&[1, -3, 2, 2, -3, 1], 48),
            (&[-1, 5, -10, 10, -5, 1], 120),
        ],
    },
    ClosedForm {
        id: StencilId::BoundaryC8,
        offsets: &[-3, -2, -1, 0, 1, 2, 3, 4],
        rows: &[
            (&[-191, 1879, -9531, 68323, 68323, -9531, 1879, -191], 120960),
            (&[79, -1093, 9399, -325685, 325685, -9399, 1093, -79], 302400),
            (&[67, -655, 3243, -2655, -2655, 3243, -655, 67], 6720),
            (&[-391, 5377, -45171, 111365, -111365, 45171, -5377, 391], 142560),
            (&[-37, 317, -729, 449, 449, -729, 317, -37], 6336),
            (&[31, -373, 1431, -2645, 2645, -1431, 373, -31], 18720),
            (&[1, -5, 9, -5, -5, 9, -5, 1], 1440),
            (&[-1, 7, -21, 35, -35, 21, -7, 1], 5040),
        ],
    },
];
