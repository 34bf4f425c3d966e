//! Matrices and printed values of the two eigenvalue tables.

/// `(label, printed statistic index, printed value, rows)`.
pub(crate) const TABLE1: &[(&str, usize, f64, &[&[i64]])] = &[
    (
        "A1",
        3,
        -0.6557,
        &[
            &[0, 1, 2, 3, 1],
            &[1, 0, 1, 2, 2],
            &[2, 1, 0, 1, 2],
            &[3, 2, 1, 0, 2],
            &[1, 2, 2, 2, 0],
        ],
    ),
    (
        "A2",
        3,
        -0.9321,
        &[
            &[0, 1, 2, 3, 1],
            &[1, 0, 1, 2, 2],
            &[2, 1, 0, 1, 2],
            &[3, 2, 1, 0, 3],
            &[1, 2, 2, 3, 0],
        ],
    ),
    (
        "A3",
        3,
        -0.6286,
        &[
            &[0, 1, 2, 3, 1],
            &[1, 0, 1, 2, 2],
            &[2, 1, 0, 1, 3],
            &[3, 2, 1, 0, 2],
            &[1, 2, 3, 2, 0],
        ],
    ),
    (
        "A4",
        3,
        -0.6012,
        &[
            &[0, 1, 2, 3, 1],
            &[1, 0, 1, 2, 2],
            &[2, 1, 0, 1, 3],
            &[3, 2, 1, 0, 3],
            &[1, 2, 3, 3, 0],
        ],
    ),
    (
        "A5",
        3,
        -0.8365,
        &[
            &[0, 1, 2, 3, 2],
            &[1, 0, 1, 2, 1],
            &[2, 1, 0, 1, 1],
            &[3, 2, 1, 0, 2],
            &[2, 1, 1, 2, 0],
        ],
    ),
    (
        "A6",
        5,
        -2.5294,
        &[
            &[0, 1, 2, 3, 2, 2],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 2, 2],
            &[2, 1, 2, 2, 0, 1],
            &[2, 1, 2, 2, 1, 0],
        ],
    ),
    (
        "A7",
        5,
        -2.4413,
        &[
            &[0, 1, 2, 3, 2, 2],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 2, 3],
            &[2, 1, 2, 2, 0, 1],
            &[2, 1, 2, 3, 1, 0],
        ],
    ),
    (
        "A8",
        5,
        -2.4413,
        &[
            &[0, 1, 2, 3, 2, 2],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 3, 2],
            &[2, 1, 2, 3, 0, 1],
            &[2, 1, 2, 2, 1, 0],
        ],
    ),
    (
        "A9",
        5,
        -2.3224,
        &[
            &[0, 1, 2, 3, 2, 2],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 3, 3],
            &[2, 1, 2, 3, 0, 1],
            &[2, 1, 2, 3, 1, 0],
        ],
    ),
    (
        "A10",
        3,
        -0.7666,
        &[
            &[0, 1, 2, 3, 1, 1],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 2, 2],
            &[1, 1, 2, 2, 0, 2],
            &[1, 1, 2, 2, 2, 0],
        ],
    ),
    (
        "A11",
        3,
        -0.7520,
        &[
            &[0, 1, 2, 3, 1, 1],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 2, 3],
            &[1, 1, 2, 2, 0, 2],
            &[1, 1, 2, 3, 2, 0],
        ],
    ),
    (
        "A12",
        3,
        -2.0671,
        &[
            &[0, 1, 2, 3, 1, 1],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 3, 2],
            &[1, 1, 2, 3, 0, 2],
            &[1, 1, 2, 2, 2, 0],
        ],
    ),
    (
        "A13",
        3,
        -0.6851,
        &[
            &[0, 1, 2, 3, 1, 1],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 3, 3],
            &[1, 1, 2, 3, 0, 2],
            &[1, 1, 2, 3, 2, 0],
        ],
    ),
    (
        "A14",
        5,
        -2.1099,
        &[
            &[0, 1, 2, 3, 2, 1],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 2, 2],
            &[2, 1, 2, 2, 0, 1],
            &[1, 1, 2, 2, 1, 0],
        ],
    ),
    (
        "A15",
        5,
        -2.1725,
        &[
            &[0, 1, 2, 3, 2, 1],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 2, 2],
            &[2, 1, 2, 2, 0, 2],
            &[1, 1, 2, 2, 2, 0],
        ],
    ),
    (
        "A16",
        5,
        -2.1099,
        &[
            &[0, 1, 2, 3, 2, 1],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 2, 3],
            &[2, 1, 2, 2, 0, 1],
            &[1, 1, 2, 3, 1, 0],
        ],
    ),
    (
        "A17",
        5,
        -2.0898,
        &[
            &[0, 1, 2, 3, 2, 1],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 2, 3],
            &[2, 1, 2, 2, 0, 2],
            &[1, 1, 2, 3, 2, 0],
        ],
    ),
    (
        "A18",
        3,
        -0.5714,
        &[
            &[0, 1, 2, 3, 2, 1],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 3, 2],
            &[2, 1, 2, 3, 0, 1],
            &[1, 1, 2, 2, 1, 0],
        ],
    ),
    (
        "A19",
        5,
        -2.4413,
        &[
            &[0, 1, 2, 3, 2, 1],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 3, 2],
            &[2, 1, 2, 3, 0, 2],
            &[1, 1, 2, 2, 2, 0],
        ],
    ),
    (
        "A20",
        3,
        -0.6851,
        &[
            &[0, 1, 2, 3, 2, 1],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 3, 3],
            &[2, 1, 2, 3, 0, 1],
            &[1, 1, 2, 3, 1, 0],
        ],
    ),
    (
        "A21",
        5,
        -2.3224,
        &[
            &[0, 1, 2, 3, 2, 1],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 3, 3],
            &[2, 1, 2, 3, 0, 2],
            &[1, 1, 2, 3, 2, 0],
        ],
    ),
    (
        "A22",
        5,
        -2.6712,
        &[
            &[0, 1, 2, 3, 2, 1],
            &[1, 0, 1, 2, 1, 2],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 2, 2],
            &[2, 1, 2, 2, 0, 2],
            &[1, 2, 1, 2, 2, 0],
        ],
    ),
    (
        "A23",
        5,
        -3.4142,
        &[
            &[0, 1, 2, 3, 2, 1],
            &[1, 0, 1, 2, 1, 2],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 2, 2],
            &[2, 1, 2, 2, 0, 3],
            &[1, 2, 1, 2, 3, 0],
        ],
    ),
    (
        "A24",
        5,
        -2.5829,
        &[
            &[0, 1, 2, 3, 2, 1],
            &[1, 0, 1, 2, 1, 2],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 3, 2],
            &[2, 1, 2, 3, 0, 2],
            &[1, 2, 1, 2, 2, 0],
        ],
    ),
    (
        "A25",
        5,
        -3.1708,
        &[
            &[0, 1, 2, 3, 2, 1],
            &[1, 0, 1, 2, 1, 2],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 3, 2],
            &[2, 1, 2, 3, 0, 3],
            &[1, 2, 1, 2, 3, 0],
        ],
    ),
    (
        "A26",
        5,
        -2.4216,
        &[
            &[0, 1, 2, 3, 2, 1],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 2, 2],
            &[2, 1, 2, 2, 0, 2],
            &[1, 1, 1, 2, 2, 0],
        ],
    ),
    (
        "A27",
        5,
        -2.3862,
        &[
            &[0, 1, 2, 3, 2, 1],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 3, 2],
            &[2, 1, 2, 3, 0, 2],
            &[1, 1, 1, 2, 2, 0],
        ],
    ),
    (
        "A28",
        3,
        -0.4353,
        &[
            &[0, 1, 2, 3, 1, 1],
            &[1, 0, 1, 2, 1, 2],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 2, 2],
            &[1, 1, 2, 2, 0, 2],
            &[1, 2, 1, 2, 2, 0],
        ],
    ),
    (
        "A29",
        3,
        -0.8401,
        &[
            &[0, 1, 2, 3, 1, 1],
            &[1, 0, 1, 2, 1, 2],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 3, 2],
            &[1, 1, 2, 3, 0, 2],
            &[1, 2, 1, 2, 2, 0],
        ],
    ),
    (
        "A30",
        3,
        -0.4523,
        &[
            &[0, 1, 2, 3, 1, 1],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 2, 2],
            &[1, 1, 2, 2, 0, 2],
            &[1, 1, 1, 2, 2, 0],
        ],
    ),
    (
        "A31",
        3,
        -0.6010,
        &[
            &[0, 1, 2, 3, 1, 1],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 3, 2],
            &[1, 1, 2, 3, 0, 2],
            &[1, 1, 1, 2, 2, 0],
        ],
    ),
    (
        "A32",
        3,
        -0.8303,
        &[
            &[0, 1, 2, 3, 2, 2],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 2, 1],
            &[2, 1, 2, 2, 0, 1],
            &[2, 1, 2, 1, 1, 0],
        ],
    ),
    (
        "A33",
        3,
        -0.6712,
        &[
            &[0, 1, 2, 3, 2, 2],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 2, 1],
            &[2, 1, 2, 2, 0, 1],
            &[2, 1, 1, 1, 1, 0],
        ],
    ),
    (
        "A34",
        3,
        -0.6535,
        &[
            &[0, 1, 2, 3, 1, 2],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 2],
            &[3, 2, 1, 0, 2, 1],
            &[1, 1, 2, 2, 0, 1],
            &[2, 1, 2, 1, 1, 0],
        ],
    ),
    (
        "A35",
        3,
        -0.4679,
        &[
            &[0, 1, 2, 3, 1, 2],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 2, 1],
            &[1, 1, 2, 2, 0, 1],
            &[2, 1, 1, 1, 1, 0],
        ],
    ),
    (
        "A36",
        5,
        -2.3391,
        &[
            &[0, 1, 2, 3, 2, 2],
            &[1, 0, 1, 2, 1, 2],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 2, 2],
            &[2, 1, 2, 2, 0, 1],
            &[2, 2, 1, 2, 1, 0],
        ],
    ),
    (
        "A37",
        5,
        -2.5829,
        &[
            &[0, 1, 2, 3, 2, 3],
            &[1, 0, 1, 2, 1, 2],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 2, 2],
            &[2, 1, 2, 2, 0, 1],
            &[3, 2, 1, 2, 1, 0],
        ],
    ),
    (
        "A38",
        5,
        -2.5829,
        &[
            &[0, 1, 2, 3, 2, 2],
            &[1, 0, 1, 2, 1, 2],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 3, 2],
            &[2, 1, 2, 3, 0, 1],
            &[2, 2, 1, 2, 1, 0],
        ],
    ),
    (
        "A39",
        5,
        -3.1708,
        &[
            &[0, 1, 2, 3, 2, 3],
            &[1, 0, 1, 2, 1, 2],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 3, 2],
            &[2, 1, 2, 3, 0, 1],
            &[3, 2, 1, 2, 1, 0],
        ],
    ),
    (
        "A40",
        3,
        -0.8636,
        &[
            &[0, 1, 2, 3, 2, 2],
            &[1, 0, 1, 2, 1, 2],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 2, 1],
            &[2, 1, 2, 2, 0, 1],
            &[2, 2, 1, 1, 1, 0],
        ],
    ),
    (
        "A41",
        3,
        -0.8401,
        &[
            &[0, 1, 2, 3, 2, 3],
            &[1, 0, 1, 2, 1, 2],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 2, 1],
            &[2, 1, 2, 2, 0, 1],
            &[3, 2, 1, 1, 1, 0],
        ],
    ),
    (
        "A42",
        3,
        -0.7720,
        &[
            &[0, 1, 2, 3, 1, 2],
            &[1, 0, 1, 2, 1, 2],
            &[2, 1, 0, 1, 2, 1],
            &[3, 2, 1, 0, 2, 1],
            &[1, 1, 2, 2, 0, 1],
            &[2, 2, 1, 1, 1, 0],
        ],
    ),
    (
        "A43",
        5,
        -2.3770,
        &[
            &[0, 1, 2, 3, 1, 1],
            &[1, 0, 1, 2, 2, 2],
            &[2, 1, 0, 1, 1, 1],
            &[3, 2, 1, 0, 2, 2],
            &[1, 2, 1, 2, 0, 1],
            &[1, 2, 1, 2, 1, 0],
        ],
    ),
    (
        "A44",
        3,
        -0.7465,
        &[
            &[0, 1, 2, 3, 1, 1],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 1, 1],
            &[3, 2, 1, 0, 2, 2],
            &[1, 1, 1, 2, 0, 2],
            &[1, 1, 1, 2, 2, 0],
        ],
    ),
    (
        "A45",
        3,
        -0.7465,
        &[
            &[0, 1, 2, 3, 1, 1],
            &[1, 0, 1, 2, 2, 1],
            &[2, 1, 0, 1, 1, 1],
            &[3, 2, 1, 0, 2, 2],
            &[1, 2, 1, 2, 0, 1],
            &[1, 1, 1, 2, 1, 0],
        ],
    ),
    (
        "A46",
        5,
        -2.3770,
        &[
            &[0, 1, 2, 3, 1, 1],
            &[1, 0, 1, 2, 2, 1],
            &[2, 1, 0, 1, 1, 1],
            &[3, 2, 1, 0, 2, 2],
            &[1, 2, 1, 2, 0, 2],
            &[1, 1, 1, 2, 2, 0],
        ],
    ),
    (
        "A47",
        3,
        -0.4607,
        &[
            &[0, 1, 2, 3, 1, 2],
            &[1, 0, 1, 2, 2, 1],
            &[2, 1, 0, 1, 1, 2],
            &[3, 2, 1, 0, 2, 1],
            &[1, 2, 1, 2, 0, 2],
            &[2, 1, 2, 1, 2, 0],
        ],
    ),
    (
        "A48",
        3,
        0.0,
        &[
            &[0, 1, 2, 3, 1, 2],
            &[1, 0, 1, 2, 2, 1],
            &[2, 1, 0, 1, 1, 2],
            &[3, 2, 1, 0, 2, 1],
            &[1, 2, 1, 2, 0, 3],
            &[2, 1, 2, 1, 3, 0],
        ],
    ),
    (
        "A49",
        3,
        -0.6535,
        &[
            &[0, 1, 2, 3, 1, 2],
            &[1, 0, 1, 2, 2, 1],
            &[2, 1, 0, 1, 1, 1],
            &[3, 2, 1, 0, 2, 1],
            &[1, 2, 1, 2, 0, 2],
            &[2, 1, 1, 1, 2, 0],
        ],
    ),
    (
        "A50",
        3,
        -0.4679,
        &[
            &[0, 1, 2, 3, 1, 2],
            &[1, 0, 1, 2, 1, 1],
            &[2, 1, 0, 1, 1, 1],
            &[3, 2, 1, 0, 2, 1],
            &[1, 1, 1, 2, 0, 2],
            &[2, 1, 1, 1, 2, 0],
        ],
    ),
    (
        "A51",
        3,
        -0.7720,
        &[
            &[0, 1, 2, 3, 1, 2],
            &[1, 0, 1, 2, 2, 1],
            &[2, 1, 0, 1, 1, 2],
            &[3, 2, 1, 0, 2, 1],
            &[1, 2, 1, 2, 0, 1],
            &[2, 1, 2, 1, 1, 0],
        ],
    ),
];

/// Bordering distances `(d1, d2, d3, d4)` and the printed fourth eigenvalue.
pub(crate) const TABLE2: &[([i64; 4], f64)] = &[
    ([2, 2, 2, 2], -2.3956),
    ([2, 2, 2, 3], -2.3810),
    ([2, 2, 3, 2], -3.0586),
    ([2, 2, 3, 3], -2.6028),
    ([2, 3, 2, 2], -3.0586),
    ([2, 3, 2, 3], -3.1163),
    ([2, 3, 3, 2], -3.4142),
    ([2, 3, 3, 3], -3.1014),
    ([3, 2, 2, 2], -2.3810),
    ([3, 2, 2, 3], -3.1436),
    ([3, 2, 3, 2], -3.1163),
    ([3, 2, 3, 3], -3.2798),
    ([3, 3, 2, 2], -2.6028),
    ([3, 3, 2, 3], -3.2798),
    ([3, 3, 3, 2], -3.1014),
    ([3, 3, 3, 3], -3.4142),
];
