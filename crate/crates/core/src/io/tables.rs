//! Orbit representatives of the three 2-(8,3,21;2) designs of the published
//! LS_2[3](2,3,8) large set, in table order. Each triple `[X, Y, Z]` packs three
//! column vectors of F_2^8 with bit `i` holding coordinate `i`.

pub const TABLE_B1: [[u64; 3]; 127] = [
    [1, 112, 128], [1, 48, 128], [2, 80, 128], [2, 96, 128], [3, 48, 128],
    [3, 64, 128], [4, 32, 128], [4, 48, 128], [4, 72, 128], [5, 72, 128],
    [5, 80, 128], [6, 32, 128], [6, 72, 128], [6, 96, 128], [7, 32, 128],
    [7, 48, 128], [7, 80, 128], [8, 64, 128], [9, 64, 128], [9, 96, 128],
    [10, 32, 128], [10, 64, 128], [12, 96, 128], [13, 32, 128], [13, 64, 128],
    [14, 32, 128], [14, 64, 128], [15, 16, 128], [15, 96, 128], [16, 64, 128],
    [17, 64, 128], [17, 96, 128], [18, 32, 128], [19, 8, 128], [19, 96, 128],
    [20, 96, 128], [21, 24, 128], [21, 32, 128], [21, 96, 128], [23, 8, 128],
    [25, 32, 128], [33, 48, 128], [33, 64, 128], [33, 80, 128], [34, 64, 128],
    [35, 4, 128], [35, 48, 128], [36, 64, 128], [37, 40, 128], [37, 64, 128],
    [38, 16, 128], [38, 112, 128], [40, 112, 128], [41, 112, 128], [41, 64, 128],
    [42, 48, 128], [43, 80, 128], [44, 16, 128], [45, 80, 128], [47, 112, 128],
    [49, 40, 128], [49, 64, 128], [50, 64, 128], [50, 84, 128], [52, 40, 128],
    [55, 56, 128], [55, 64, 128], [56, 64, 128], [57, 4, 128], [60, 64, 128],
    [61, 64, 128], [62, 64, 128], [63, 64, 128], [65, 32, 128], [66, 80, 128],
    [67, 48, 128], [67, 96, 128], [69, 16, 128], [69, 80, 128], [70, 8, 128],
    [70, 32, 128], [70, 96, 128], [71, 16, 128], [71, 48, 128], [72, 80, 128],
    [73, 80, 128], [74, 16, 128], [75, 80, 128], [77, 96, 128], [78, 32, 128],
    [79, 32, 128], [79, 48, 128], [79, 112, 128], [83, 8, 128], [83, 96, 128],
    [84, 8, 128], [84, 96, 128], [85, 24, 128], [85, 32, 128], [85, 96, 128],
    [86, 32, 128], [87, 32, 128], [89, 96, 128], [90, 32, 128], [92, 32, 128],
    [94, 32, 128], [94, 96, 128], [98, 8, 128], [98, 16, 128], [99, 16, 128],
    [99, 36, 128], [100, 8, 128], [100, 24, 128], [100, 40, 128], [101, 16, 128],
    [101, 112, 128], [102, 80, 128], [103, 40, 128], [103, 48, 128], [103, 72, 128],
    [105, 112, 128], [106, 112, 128], [110, 16, 128], [110, 48, 128], [114, 40, 128],
    [114, 120, 128], [122, 4, 128],
];

pub const TABLE_B2: [[u64; 3]; 127] = [
    [1, 24, 128], [1, 32, 128], [1, 64, 128], [1, 92, 128], [2, 32, 128],
    [2, 64, 128], [3, 16, 128], [3, 32, 128], [3, 68, 128], [3, 80, 128],
    [3, 96, 128], [5, 32, 128], [5, 64, 128], [7, 96, 128], [8, 48, 128],
    [9, 16, 128], [10, 96, 128], [12, 32, 128], [12, 64, 128], [14, 48, 128],
    [14, 80, 128], [15, 32, 128], [15, 48, 128], [15, 112, 128], [18, 64, 128],
    [19, 72, 128], [20, 32, 128], [20, 64, 128], [20, 72, 128], [20, 120, 128],
    [22, 32, 128], [22, 64, 128], [23, 64, 128], [25, 64, 128], [26, 96, 128],
    [27, 32, 128], [27, 64, 128], [27, 96, 128], [28, 64, 128], [28, 96, 128],
    [30, 64, 128], [31, 32, 128], [31, 96, 128], [32, 64, 128], [34, 20, 128],
    [34, 80, 128], [35, 8, 128], [35, 16, 128], [35, 36, 128], [37, 8, 128],
    [37, 72, 128], [37, 112, 128], [38, 64, 128], [38, 72, 128], [38, 80, 128],
    [39, 80, 128], [39, 120, 128], [40, 16, 128], [41, 16, 128], [41, 48, 128],
    [42, 64, 128], [43, 64, 128], [44, 80, 128], [46, 16, 128], [46, 64, 128],
    [47, 16, 128], [47, 80, 128], [51, 64, 128], [52, 64, 128], [52, 72, 128],
    [54, 8, 128], [55, 24, 128], [65, 24, 128], [65, 112, 128], [66, 16, 128],
    [66, 48, 128], [66, 112, 128], [67, 80, 128], [67, 112, 128], [68, 16, 128],
    [68, 96, 128], [69, 24, 128], [69, 32, 128], [69, 40, 128], [69, 96, 128],
    [70, 48, 128], [71, 32, 128], [71, 72, 128], [71, 80, 128], [71, 112, 128],
    [72, 32, 128], [72, 96, 128], [73, 96, 128], [74, 32, 128], [74, 96, 128],
    [76, 32, 128], [76, 48, 128], [77, 32, 128], [78, 96, 128], [82, 32, 128],
    [82, 56, 128], [83, 32, 128], [84, 32, 128], [85, 40, 128], [86, 96, 128],
    [87, 8, 128], [87, 24, 128], [87, 96, 128], [91, 32, 128], [95, 96, 128],
    [98, 48, 128], [98, 80, 128], [99, 48, 128], [99, 80, 128], [100, 16, 128],
    [102, 16, 128], [102, 40, 128], [103, 16, 128], [108, 48, 128], [109, 16, 128],
    [109, 48, 128], [114, 4, 128], [114, 36, 128], [115, 40, 128], [115, 72, 128],
    [117, 120, 128], [118, 120, 128],
];

pub const TABLE_B3: [[u64; 3]; 127] = [
    [1, 16, 128], [2, 120, 128], [2, 36, 128], [2, 52, 128], [3, 40, 128],
    [4, 56, 128], [4, 64, 128], [4, 96, 128], [5, 16, 128], [5, 96, 128],
    [5, 112, 128], [6, 56, 128], [6, 64, 128], [7, 16, 128], [7, 64, 128],
    [7, 112, 128], [8, 32, 128], [8, 80, 128], [8, 96, 128], [9, 32, 128],
    [9, 48, 128], [9, 80, 128], [10, 16, 128], [13, 48, 128], [13, 96, 128],
    [14, 16, 128], [14, 96, 128], [15, 64, 128], [15, 80, 128], [17, 32, 128],
    [19, 32, 128], [19, 64, 128], [19, 68, 128], [21, 64, 128], [23, 32, 128],
    [23, 96, 128], [24, 32, 128], [24, 64, 128], [26, 64, 128], [27, 4, 128],
    [28, 32, 128], [30, 32, 128], [30, 96, 128], [31, 64, 128], [33, 40, 128],
    [33, 72, 128], [34, 48, 128], [34, 72, 128], [34, 100, 128], [35, 64, 128],
    [35, 72, 128], [35, 80, 128], [36, 120, 128], [37, 24, 128], [37, 80, 128],
    [39, 8, 128], [39, 16, 128], [39, 48, 128], [39, 64, 128], [40, 64, 128],
    [42, 80, 128], [43, 16, 128], [44, 64, 128], [45, 64, 128], [47, 64, 128],
    [48, 64, 128], [49, 8, 128], [53, 64, 128], [54, 64, 128], [55, 72, 128],
    [57, 64, 128], [58, 64, 128], [59, 64, 128], [65, 16, 128], [65, 48, 128],
    [65, 80, 128], [65, 96, 128], [66, 32, 128], [66, 96, 128], [67, 16, 128],
    [67, 32, 128], [68, 32, 128], [69, 48, 128], [69, 120, 128], [70, 16, 128],
    [71, 8, 128], [71, 56, 128], [72, 48, 128], [73, 16, 128], [73, 32, 128],
    [76, 16, 128], [76, 80, 128], [76, 96, 128], [77, 112, 128], [78, 16, 128],
    [79, 16, 128], [79, 96, 128], [81, 32, 128], [81, 96, 128], [82, 8, 128],
    [82, 96, 128], [83, 40, 128], [86, 24, 128], [87, 40, 128], [87, 72, 128],
    [88, 32, 128], [91, 96, 128], [92, 96, 128], [95, 32, 128], [99, 112, 128],
    [100, 112, 128], [100, 120, 128], [101, 24, 128], [101, 8, 128], [101, 48, 128],
    [102, 56, 128], [104, 16, 128], [104, 112, 128], [107, 112, 128], [107, 48, 128],
    [110, 80, 128], [111, 16, 128], [114, 8, 128], [114, 52, 128], [114, 84, 128],
    [118, 8, 128], [118, 24, 128],
];
