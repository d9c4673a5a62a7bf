//! Reference layouts for the drawn grids and curve panels.
//!
//! Grids are indexed `[y][x]`. Curve paths list the cells in visiting order.

pub const ROSENBERG_STRONG: [[u64; 5]; 5] = [
    [0, 3, 8, 15, 24],
    [1, 2, 7, 14, 23],
    [4, 5, 6, 13, 22],
    [9, 10, 11, 12, 21],
    [16, 17, 18, 19, 20],
];

pub const P32: [[u64; 10]; 9] = [
    [0, 4, 8, 12, 16, 20, 24, 28, 72, 81],
    [1, 5, 9, 13, 17, 21, 25, 29, 73, 82],
    [2, 6, 10, 14, 18, 22, 26, 30, 74, 83],
    [3, 7, 11, 15, 19, 23, 27, 31, 75, 84],
    [32, 33, 34, 35, 36, 37, 38, 39, 76, 85],
    [40, 41, 42, 43, 44, 45, 46, 47, 77, 86],
    [48, 49, 50, 51, 52, 53, 54, 55, 78, 87],
    [56, 57, 58, 59, 60, 61, 62, 63, 79, 88],
    [64, 65, 66, 67, 68, 69, 70, 71, 80, 89],
];

pub const P11: [[u64; 5]; 5] = [
    [0, 2, 6, 12, 20],
    [1, 3, 7, 13, 21],
    [4, 5, 8, 14, 22],
    [9, 10, 11, 15, 23],
    [16, 17, 18, 19, 24],
];

pub const PEANO3: [(u64, u64); 81] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (1, 2),
    (1, 1),
    (1, 0),
    (2, 0),
    (2, 1),
    (2, 2),
    (2, 3),
    (2, 4),
    (2, 5),
    (1, 5),
    (1, 4),
    (1, 3),
    (0, 3),
    (0, 4),
    (0, 5),
    (0, 6),
    (0, 7),
    (0, 8),
    (1, 8),
    (1, 7),
    (1, 6),
    (2, 6),
    (2, 7),
    (2, 8),
    (3, 8),
    (3, 7),
    (3, 6),
    (4, 6),
    (4, 7),
    (4, 8),
    (5, 8),
    (5, 7),
    (5, 6),
    (5, 5),
    (5, 4),
    (5, 3),
    (4, 3),
    (4, 4),
    (4, 5),
    (3, 5),
    (3, 4),
    (3, 3),
    (3, 2),
    (3, 1),
    (3, 0),
    (4, 0),
    (4, 1),
    (4, 2),
    (5, 2),
    (5, 1),
    (5, 0),
    (6, 0),
    (6, 1),
    (6, 2),
    (7, 2),
    (7, 1),
    (7, 0),
    (8, 0),
    (8, 1),
    (8, 2),
    (8, 3),
    (8, 4),
    (8, 5),
    (7, 5),
    (7, 4),
    (7, 3),
    (6, 3),
    (6, 4),
    (6, 5),
    (6, 6),
    (6, 7),
    (6, 8),
    (7, 8),
    (7, 7),
    (7, 6),
    (8, 6),
    (8, 7),
    (8, 8),
];

pub const HILBERT2: [(u64, u64); 64] = [
    (0, 0),
    (0, 1),
    (1, 1),
    (1, 0),
    (2, 0),
    (3, 0),
    (3, 1),
    (2, 1),
    (2, 2),
    (3, 2),
    (3, 3),
    (2, 3),
    (1, 3),
    (1, 2),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 4),
    (1, 5),
    (0, 5),
    (0, 6),
    (0, 7),
    (1, 7),
    (1, 6),
    (2, 6),
    (2, 7),
    (3, 7),
    (3, 6),
    (3, 5),
    (2, 5),
    (2, 4),
    (3, 4),
    (4, 4),
    (5, 4),
    (5, 5),
    (4, 5),
    (4, 6),
    (4, 7),
    (5, 7),
    (5, 6),
    (6, 6),
    (6, 7),
    (7, 7),
    (7, 6),
    (7, 5),
    (6, 5),
    (6, 4),
    (7, 4),
    (7, 3),
    (7, 2),
    (6, 2),
    (6, 3),
    (5, 3),
    (4, 3),
    (4, 2),
    (5, 2),
    (5, 1),
    (4, 1),
    (4, 0),
    (5, 0),
    (6, 0),
    (6, 1),
    (7, 1),
    (7, 0),
];

pub const ZORDER2: [(u64, u64); 64] = [
    (0, 0),
    (0, 1),
    (1, 0),
    (1, 1),
    (0, 2),
    (0, 3),
    (1, 2),
    (1, 3),
    (2, 0),
    (2, 1),
    (3, 0),
    (3, 1),
    (2, 2),
    (2, 3),
    (3, 2),
    (3, 3),
    (0, 4),
    (0, 5),
    (1, 4),
    (1, 5),
    (0, 6),
    (0, 7),
    (1, 6),
    (1, 7),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (2, 6),
    (2, 7),
    (3, 6),
    (3, 7),
    (4, 0),
    (4, 1),
    (5, 0),
    (5, 1),
    (4, 2),
    (4, 3),
    (5, 2),
    (5, 3),
    (6, 0),
    (6, 1),
    (7, 0),
    (7, 1),
    (6, 2),
    (6, 3),
    (7, 2),
    (7, 3),
    (4, 4),
    (4, 5),
    (5, 4),
    (5, 5),
    (4, 6),
    (4, 7),
    (5, 6),
    (5, 7),
    (6, 4),
    (6, 5),
    (7, 4),
    (7, 5),
    (6, 6),
    (6, 7),
    (7, 6),
    (7, 7),
];

pub const GRAY2: [(u64, u64); 64] = [
    (0, 0),
    (0, 1),
    (1, 1),
    (1, 0),
    (1, 3),
    (1, 2),
    (0, 2),
    (0, 3),
    (3, 3),
    (3, 2),
    (2, 2),
    (2, 3),
    (2, 0),
    (2, 1),
    (3, 1),
    (3, 0),
    (3, 7),
    (3, 6),
    (2, 6),
    (2, 7),
    (2, 4),
    (2, 5),
    (3, 5),
    (3, 4),
    (0, 4),
    (0, 5),
    (1, 5),
    (1, 4),
    (1, 7),
    (1, 6),
    (0, 6),
    (0, 7),
    (7, 7),
    (7, 6),
    (6, 6),
    (6, 7),
    (6, 4),
    (6, 5),
    (7, 5),
    (7, 4),
    (4, 4),
    (4, 5),
    (5, 5),
    (5, 4),
    (5, 7),
    (5, 6),
    (4, 6),
    (4, 7),
    (4, 0),
    (4, 1),
    (5, 1),
    (5, 0),
    (5, 3),
    (5, 2),
    (4, 2),
    (4, 3),
    (7, 3),
    (7, 2),
    (6, 2),
    (6, 3),
    (6, 0),
    (6, 1),
    (7, 1),
    (7, 0),
];

pub const NONISOMETRIC2: [(u64, u64); 64] = [
    (0, 0),
    (0, 1),
    (1, 0),
    (1, 1),
    (2, 2),
    (3, 3),
    (3, 2),
    (2, 3),
    (1, 3),
    (0, 2),
    (0, 3),
    (1, 2),
    (2, 1),
    (2, 0),
    (3, 1),
    (3, 0),
    (4, 0),
    (4, 1),
    (5, 1),
    (5, 0),
    (6, 0),
    (7, 0),
    (7, 1),
    (6, 1),
    (5, 2),
    (4, 2),
    (4, 3),
    (5, 3),
    (6, 3),
    (6, 2),
    (7, 2),
    (7, 3),
    (7, 4),
    (7, 5),
    (6, 5),
    (6, 4),
    (5, 4),
    (4, 4),
    (4, 5),
    (5, 5),
    (6, 6),
    (7, 6),
    (7, 7),
    (6, 7),
    (5, 7),
    (5, 6),
    (4, 6),
    (4, 7),
    (3, 7),
    (3, 6),
    (2, 7),
    (2, 6),
    (1, 5),
    (0, 4),
    (0, 5),
    (1, 4),
    (2, 4),
    (3, 5),
    (3, 4),
    (2, 5),
    (1, 6),
    (1, 7),
    (0, 6),
    (0, 7),
];
