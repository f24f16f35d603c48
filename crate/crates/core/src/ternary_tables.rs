// order of variables: a, b, c, a2, a3, b1, b3, c1, c2, m
pub(crate) const TERNARY_C4: &[([u8; 10], i64)] = &[
    ([1, 1, 1, 0, 0, 0, 0, 0, 0, 1], -216),
    ([1, 1, 0, 0, 0, 0, 0, 1, 1, 0], 144),
    ([1, 0, 1, 0, 0, 1, 1, 0, 0, 0], 144),
    ([1, 0, 0, 0, 0, 1, 0, 0, 2, 0], -48),
    ([1, 0, 0, 0, 0, 0, 2, 1, 0, 0], -48),
    ([1, 0, 0, 0, 0, 0, 1, 0, 1, 1], 24),
    ([0, 1, 1, 1, 1, 0, 0, 0, 0, 0], 144),
    ([0, 1, 0, 1, 0, 0, 0, 2, 0, 0], -48),
    ([0, 1, 0, 0, 2, 0, 0, 0, 1, 0], -48),
    ([0, 1, 0, 0, 1, 0, 0, 1, 0, 1], 24),
    ([0, 0, 1, 2, 0, 0, 1, 0, 0, 0], -48),
    ([0, 0, 1, 1, 0, 1, 0, 0, 0, 1], 24),
    ([0, 0, 1, 0, 1, 2, 0, 0, 0, 0], -48),
    ([0, 0, 0, 2, 0, 0, 0, 0, 2, 0], 16),
    ([0, 0, 0, 1, 1, 0, 1, 0, 1, 0], -16),
    ([0, 0, 0, 1, 0, 1, 0, 1, 1, 0], -16),
    ([0, 0, 0, 1, 0, 0, 1, 1, 0, 1], 24),
    ([0, 0, 0, 1, 0, 0, 0, 0, 1, 2], -8),
    ([0, 0, 0, 0, 2, 0, 2, 0, 0, 0], 16),
    ([0, 0, 0, 0, 1, 1, 1, 1, 0, 0], -16),
    ([0, 0, 0, 0, 1, 1, 0, 0, 1, 1], 24),
    ([0, 0, 0, 0, 1, 0, 1, 0, 0, 2], -8),
    ([0, 0, 0, 0, 0, 2, 0, 2, 0, 0], 16),
    ([0, 0, 0, 0, 0, 1, 0, 1, 0, 2], -8),
    ([0, 0, 0, 0, 0, 0, 0, 0, 0, 4], 1),
];

pub(crate) const TERNARY_C6: &[([u8; 10], i64)] = &[
    ([2, 2, 2, 0, 0, 0, 0, 0, 0, 0], 5832),
    ([2, 1, 1, 0, 0, 0, 1, 0, 1, 0], -3888),
    ([2, 1, 0, 0, 0, 0, 0, 0, 3, 0], 864),
    ([2, 0, 1, 0, 0, 0, 3, 0, 0, 0], 864),
    ([2, 0, 0, 0, 0, 0, 2, 0, 2, 0], -216),
    ([1, 2, 1, 0, 1, 0, 0, 1, 0, 0], -3888),
    ([1, 2, 0, 0, 0, 0, 0, 3, 0, 0], 864),
    ([1, 1, 2, 1, 0, 1, 0, 0, 0, 0], -3888),
    ([1, 1, 1, 1, 0, 0, 1, 1, 0, 0], 1296),
    ([1, 1, 1, 1, 0, 0, 0, 0, 1, 1], 1296),
    ([1, 1, 1, 0, 1, 1, 0, 0, 1, 0], 1296),
    ([1, 1, 1, 0, 1, 0, 1, 0, 0, 1], 1296),
    ([1, 1, 1, 0, 0, 1, 0, 1, 0, 1], 1296),
    ([1, 1, 1, 0, 0, 0, 0, 0, 0, 3], -540),
    ([1, 1, 0, 1, 0, 0, 0, 1, 2, 0], -864),
    ([1, 1, 0, 0, 1, 0, 1, 1, 1, 0], 1296),
    ([1, 1, 0, 0, 1, 0, 0, 0, 2, 1], -864),
    ([1, 1, 0, 0, 0, 1, 0, 2, 1, 0], -864),
    ([1, 1, 0, 0, 0, 0, 1, 2, 0, 1], -864),
    ([1, 1, 0, 0, 0, 0, 0, 1, 1, 2], 648),
    ([1, 0, 2, 0, 0, 3, 0, 0, 0, 0], 864),
    ([1, 0, 1, 1, 0, 1, 1, 0, 1, 0], 1296),
    ([1, 0, 1, 1, 0, 0, 2, 0, 0, 1], -864),
    ([1, 0, 1, 0, 1, 1, 2, 0, 0, 0], -864),
    ([1, 0, 1, 0, 0, 2, 1, 1, 0, 0], -864),
    ([1, 0, 1, 0, 0, 2, 0, 0, 1, 1], -864),
    ([1, 0, 1, 0, 0, 1, 1, 0, 0, 2], 648),
    ([1, 0, 0, 1, 0, 1, 0, 0, 3, 0], -288),
    ([1, 0, 0, 1, 0, 0, 2, 1, 1, 0], 144),
    ([1, 0, 0, 1, 0, 0, 1, 0, 2, 1], 144),
    ([1, 0, 0, 0, 1, 1, 1, 0, 2, 0], 144),
    ([1, 0, 0, 0, 1, 0, 3, 1, 0, 0], -288),
    ([1, 0, 0, 0, 1, 0, 2, 0, 1, 1], 144),
    ([1, 0, 0, 0, 0, 2, 0, 1, 2, 0], 576),
    ([1, 0, 0, 0, 0, 1, 2, 2, 0, 0], 576),
    ([1, 0, 0, 0, 0, 1, 1, 1, 1, 1], -720),
    ([1, 0, 0, 0, 0, 1, 0, 0, 2, 2], 72),
    ([1, 0, 0, 0, 0, 0, 2, 1, 0, 2], 72),
    ([1, 0, 0, 0, 0, 0, 1, 0, 1, 3], -36),
    ([0, 2, 1, 0, 3, 0, 0, 0, 0, 0], 864),
    ([0, 2, 0, 0, 2, 0, 0, 2, 0, 0], -216),
    ([0, 1, 2, 3, 0, 0, 0, 0, 0, 0], 864),
    ([0, 1, 1, 2, 1, 0, 0, 0, 1, 0], -864),
    ([0, 1, 1, 2, 0, 0, 0, 1, 0, 1], -864),
    ([0, 1, 1, 1, 2, 0, 1, 0, 0, 0], -864),
    ([0, 1, 1, 1, 1, 1, 0, 1, 0, 0], 1296),
    ([0, 1, 1, 1, 1, 0, 0, 0, 0, 2], 648),
    ([0, 1, 1, 0, 2, 1, 0, 0, 0, 1], -864),
    ([0, 1, 0, 2, 0, 0, 0, 2, 1, 0], 576),
    ([0, 1, 0, 1, 2, 0, 0, 0, 2, 0], 576),
    ([0, 1, 0, 1, 1, 0, 1, 2, 0, 0], 144),
    ([0, 1, 0, 1, 1, 0, 0, 1, 1, 1], -720),
    ([0, 1, 0, 1, 0, 1, 0, 3, 0, 0], -288),
    ([0, 1, 0, 1, 0, 0, 0, 2, 0, 2], 72),
    ([0, 1, 0, 0, 3, 0, 1, 0, 1, 0], -288),
    ([0, 1, 0, 0, 2, 1, 0, 1, 1, 0], 144),
    ([0, 1, 0, 0, 2, 0, 1, 1, 0, 1], 144),
    ([0, 1, 0, 0, 2, 0, 0, 0, 1, 2], 72),
    ([0, 1, 0, 0, 1, 1, 0, 2, 0, 1], 144),
    ([0, 1, 0, 0, 1, 0, 0, 1, 0, 3], -36),
    ([0, 0, 2, 2, 0, 2, 0, 0, 0, 0], -216),
    ([0, 0, 1, 3, 0, 0, 1, 0, 1, 0], -288),
    ([0, 0, 1, 2, 1, 0, 2, 0, 0, 0], 576),
    ([0, 0, 1, 2, 0, 1, 1, 1, 0, 0], 144),
    ([0, 0, 1, 2, 0, 1, 0, 0, 1, 1], 144),
    ([0, 0, 1, 2, 0, 0, 1, 0, 0, 2], 72),
    ([0, 0, 1, 1, 1, 2, 0, 0, 1, 0], 144),
    ([0, 0, 1, 1, 1, 1, 1, 0, 0, 1], -720),
    ([0, 0, 1, 1, 0, 2, 0, 1, 0, 1], 144),
    ([0, 0, 1, 1, 0, 1, 0, 0, 0, 3], -36),
    ([0, 0, 1, 0, 2, 2, 1, 0, 0, 0], 576),
    ([0, 0, 1, 0, 1, 3, 0, 1, 0, 0], -288),
    ([0, 0, 1, 0, 1, 2, 0, 0, 0, 2], 72),
    ([0, 0, 0, 3, 0, 0, 0, 0, 3, 0], 64),
    ([0, 0, 0, 2, 1, 0, 1, 0, 2, 0], -96),
    ([0, 0, 0, 2, 0, 1, 0, 1, 2, 0], -96),
    ([0, 0, 0, 2, 0, 0, 2, 2, 0, 0], -216),
    ([0, 0, 0, 2, 0, 0, 1, 1, 1, 1], 144),
    ([0, 0, 0, 2, 0, 0, 0, 0, 2, 2], -48),
    ([0, 0, 0, 1, 2, 0, 2, 0, 1, 0], -96),
    ([0, 0, 0, 1, 1, 1, 1, 1, 1, 0], -48),
    ([0, 0, 0, 1, 1, 1, 0, 0, 2, 1], 144),
    ([0, 0, 0, 1, 1, 0, 2, 1, 0, 1], 144),
    ([0, 0, 0, 1, 1, 0, 1, 0, 1, 2], -24),
    ([0, 0, 0, 1, 0, 2, 0, 2, 1, 0], -96),
    ([0, 0, 0, 1, 0, 1, 1, 2, 0, 1], 144),
    ([0, 0, 0, 1, 0, 1, 0, 1, 1, 2], -24),
    ([0, 0, 0, 1, 0, 0, 1, 1, 0, 3], -36),
    ([0, 0, 0, 1, 0, 0, 0, 0, 1, 4], 12),
    ([0, 0, 0, 0, 3, 0, 3, 0, 0, 0], 64),
    ([0, 0, 0, 0, 2, 2, 0, 0, 2, 0], -216),
    ([0, 0, 0, 0, 2, 1, 2, 1, 0, 0], -96),
    ([0, 0, 0, 0, 2, 1, 1, 0, 1, 1], 144),
    ([0, 0, 0, 0, 2, 0, 2, 0, 0, 2], -48),
    ([0, 0, 0, 0, 1, 2, 1, 2, 0, 0], -96),
    ([0, 0, 0, 0, 1, 2, 0, 1, 1, 1], 144),
    ([0, 0, 0, 0, 1, 1, 1, 1, 0, 2], -24),
    ([0, 0, 0, 0, 1, 1, 0, 0, 1, 3], -36),
    ([0, 0, 0, 0, 1, 0, 1, 0, 0, 4], 12),
    ([0, 0, 0, 0, 0, 3, 0, 3, 0, 0], 64),
    ([0, 0, 0, 0, 0, 2, 0, 2, 0, 2], -48),
    ([0, 0, 0, 0, 0, 1, 0, 1, 0, 4], 12),
    ([0, 0, 0, 0, 0, 0, 0, 0, 0, 6], -1),
];
