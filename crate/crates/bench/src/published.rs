//! Published result tables, used by the `paper-tables` preset and the tests.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    Lp,
    Halton,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cell {
    pub n: u64,
    pub method: Column,
    pub refined: bool,
    pub value: f64,
    pub point: &'static [f64],
}

#[derive(Debug, Clone, Copy)]
pub struct ResultTable {
    pub function: u8,
    pub cells: &'static [Cell],
}

impl ResultTable {
    pub fn cell(&self, n: u64, method: Column, refined: bool) -> Option<&Cell> {
        self.cells
            .iter()
            .find(|c| c.n == n && c.method == method && c.refined == refined)
    }

    /// Distinct N values, in table order.
    pub fn points(&self) -> Vec<u64> {
        let mut out: Vec<u64> = Vec::new();
        for c in self.cells {
            if !out.contains(&c.n) {
                out.push(c.n);
            }
        }
        out
    }
}

pub const TABLES: [ResultTable; 6] = [ROSENBROCK, FLETCHER_POWELL, POWELL, WOOD, COSINE_SPHERE, HIMMELBLAU];

/// Raw drive-design results at N = 65535: (method, value, point).
pub const DRIVE_DESIGN: [(Column, f64, [f64; 2]); 2] = [
    (Column::Lp, 27845.37, [1.49955, 6.12384]),
    (Column::Halton, 27845.02, [1.50398, 6.14608]),
];

// The Powell row printed for "8192. 32767" is listed once per N.

pub const ROSENBROCK: ResultTable = ResultTable {
    function: 1,
    cells: &[
        Cell {
            n: 2000,
            method: Column::Lp,
            refined: false,
            value: 0.0062603,
            point: &[1.0078125, 1.0078125],
        },
        Cell {
            n: 2000,
            method: Column::Lp,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 1.0000000],
        },
        Cell {
            n: 2000,
            method: Column::Halton,
            refined: false,
            value: 0.0034812,
            point: &[1.0214844, 1.0489255],
        },
        Cell {
            n: 2000,
            method: Column::Halton,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 1.0000000],
        },
        Cell {
            n: 8192,
            method: Column::Lp,
            refined: false,
            value: 0.0043641,
            point: &[0.9638672, 0.9345703],
        },
        Cell {
            n: 8192,
            method: Column::Lp,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 1.0000000],
        },
        Cell {
            n: 8192,
            method: Column::Halton,
            refined: false,
            value: 0.0004207,
            point: &[0.9980469, 0.9940558],
        },
        Cell {
            n: 8192,
            method: Column::Halton,
            refined: true,
            value: 0.0000000,
            point: &[0.9999994, 0.9999988],
        },
        Cell {
            n: 32767,
            method: Column::Lp,
            refined: false,
            value: 0.0012168,
            point: &[0.9713135, 0.9454346],
        },
        Cell {
            n: 32767,
            method: Column::Lp,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 1.0000001],
        },
        Cell {
            n: 32767,
            method: Column::Halton,
            refined: false,
            value: 0.0004207,
            point: &[0.9980469, 0.9940558],
        },
        Cell {
            n: 32767,
            method: Column::Halton,
            refined: true,
            value: 0.0000000,
            point: &[0.9999994, 0.9999988],
        },
        Cell {
            n: 65535,
            method: Column::Lp,
            refined: false,
            value: 0.0000036,
            point: &[0.9999390, 1.0000610],
        },
        Cell {
            n: 65535,
            method: Column::Lp,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 1.0000000],
        },
        Cell {
            n: 65535,
            method: Column::Halton,
            refined: false,
            value: 0.0003650,
            point: &[1.0169067, 1.0332097],
        },
        Cell {
            n: 65535,
            method: Column::Halton,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 1.0000000],
        },
    ],
};

pub const FLETCHER_POWELL: ResultTable = ResultTable {
    function: 2,
    cells: &[
        Cell {
            n: 2000,
            method: Column::Lp,
            refined: false,
            value: 0.2782941,
            point: &[0.9521484, 0.0410156, 0.0449219],
        },
        Cell {
            n: 2000,
            method: Column::Lp,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 0.0000000, 0.0000000],
        },
        Cell {
            n: 2000,
            method: Column::Halton,
            refined: false,
            value: 0.5961633,
            point: &[0.9389648, 0.3063557, 0.4396800],
        },
        Cell {
            n: 2000,
            method: Column::Halton,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 0.0000000, 0.0000000],
        },
        Cell {
            n: 8192,
            method: Column::Lp,
            refined: false,
            value: 0.1721926,
            point: &[0.9700928, 0.2556152, 0.3991699],
        },
        Cell {
            n: 8192,
            method: Column::Lp,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 0.0000000, 0.0000000],
        },
        Cell {
            n: 8192,
            method: Column::Halton,
            refined: false,
            value: 0.3818622,
            point: &[0.9422607, 0.3713865, 0.6024960],
        },
        Cell {
            n: 8192,
            method: Column::Halton,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 0.0000000, 0.0000000],
        },
        Cell {
            n: 32767,
            method: Column::Lp,
            refined: false,
            value: 0.0970329,
            point: &[0.9846497, 0.1121216, 0.1549683],
        },
        Cell {
            n: 32767,
            method: Column::Lp,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 0.0000001, 0.0000002],
        },
        Cell {
            n: 32767,
            method: Column::Halton,
            refined: false,
            value: 0.0973852,
            point: &[0.9801636, 0.0120917, 0.0433920],
        },
        Cell {
            n: 32767,
            method: Column::Halton,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 0.0000000, 0.0000001],
        },
        Cell {
            n: 65535,
            method: Column::Lp,
            refined: false,
            value: 0.0867985,
            point: &[0.9713898, 0.0281677, 0.0528259],
        },
        Cell {
            n: 65535,
            method: Column::Lp,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 0.0000000, 0.0000000],
        },
        Cell {
            n: 65535,
            method: Column::Halton,
            refined: false,
            value: 0.0883128,
            point: &[0.9718781, 0.0985283, 0.1496832],
        },
        Cell {
            n: 65535,
            method: Column::Halton,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 0.0000000, 0.0000000],
        },
    ],
};

pub const POWELL: ResultTable = ResultTable {
    function: 3,
    cells: &[
        Cell {
            n: 2000,
            method: Column::Lp,
            refined: false,
            value: 0.6550502,
            point: &[-0.7890625, 0.0546875, -0.3671875, -0.4140625],
        },
        Cell {
            n: 2000,
            method: Column::Lp,
            refined: true,
            value: 0.0000000,
            point: &[-0.0001419, 0.0000142, -0.0001390, -0.0001389],
        },
        Cell {
            n: 2000,
            method: Column::Halton,
            refined: false,
            value: 0.7399679,
            point: &[0.3549805, 0.0397805, -0.0572800, 0.0020825],
        },
        Cell {
            n: 2000,
            method: Column::Halton,
            refined: true,
            value: 0.0000000,
            point: &[0.0003630, -0.0000363, 0.0003281, 0.0003280],
        },
        Cell {
            n: 8192,
            method: Column::Lp,
            refined: false,
            value: 0.1618187,
            point: &[-0.0518799, 0.0360107, -0.1236572, -0.0137939],
        },
        Cell {
            n: 32767,
            method: Column::Lp,
            refined: false,
            value: 0.1618187,
            point: &[-0.0518799, 0.0360107, -0.1236572, -0.0137939],
        },
        Cell {
            n: 8192,
            method: Column::Lp,
            refined: true,
            value: 0.0000000,
            point: &[0.0000816, -0.0000082, 0.0002766, 0.0002766],
        },
        Cell {
            n: 32767,
            method: Column::Lp,
            refined: true,
            value: 0.0000000,
            point: &[0.0000816, -0.0000082, 0.0002766, 0.0002766],
        },
        Cell {
            n: 8192,
            method: Column::Halton,
            refined: false,
            value: 0.0711034,
            point: &[-0.1427002, 0.0269776, -0.0273280, 0.0599155],
        },
        Cell {
            n: 32767,
            method: Column::Halton,
            refined: false,
            value: 0.0711034,
            point: &[-0.1427002, 0.0269776, -0.0273280, 0.0599155],
        },
        Cell {
            n: 8192,
            method: Column::Halton,
            refined: true,
            value: 0.0000000,
            point: &[-0.0001949, 0.0000195, -0.0000995, -0.0000995],
        },
        Cell {
            n: 32767,
            method: Column::Halton,
            refined: true,
            value: 0.0000000,
            point: &[-0.0001949, 0.0000195, -0.0000995, -0.0000995],
        },
        Cell {
            n: 65535,
            method: Column::Lp,
            refined: false,
            value: 0.0625249,
            point: &[0.2141266, -0.0077057, 0.0576630, 0.1507721],
        },
        Cell {
            n: 65535,
            method: Column::Lp,
            refined: true,
            value: 0.0000000,
            point: &[0.0000578, -0.0000058, -0.0002014, -0.0002014],
        },
        Cell {
            n: 65535,
            method: Column::Halton,
            refined: false,
            value: 0.0336186,
            point: &[-0.0893707, -0.0030991, 0.0338045, 0.0803152],
        },
        Cell {
            n: 65535,
            method: Column::Halton,
            refined: true,
            value: 0.0000000,
            point: &[0.0028412, -0.0002841, 0.0014357, 0.0014357],
        },
    ],
};

pub const WOOD: ResultTable = ResultTable {
    function: 4,
    cells: &[
        Cell {
            n: 2000,
            method: Column::Lp,
            refined: false,
            value: 2.6487434,
            point: &[0.8862305, 0.7163086, 1.3051758, 1.5981445],
        },
        Cell {
            n: 2000,
            method: Column::Lp,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 1.0000000, 1.0000000, 1.0000000],
        },
        Cell {
            n: 2000,
            method: Column::Halton,
            refined: false,
            value: 3.3474517,
            point: &[1.1176758, 1.3525377, 0.8851200, 0.6272387],
        },
        Cell {
            n: 2000,
            method: Column::Halton,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 1.0000000, 1.0000000, 1.0000000],
        },
        Cell {
            n: 8192,
            method: Column::Lp,
            refined: false,
            value: 1.7646029,
            point: &[0.09338379, 0.0186768, 1.4117432, 1.9288330],
        },
        Cell {
            n: 8192,
            method: Column::Lp,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 1.0000000, 1.0000000, 1.0000000],
        },
        Cell {
            n: 8192,
            method: Column::Halton,
            refined: false,
            value: 0.8959908,
            point: &[0.8909912, 0.7892090, 1.0955520, 1.1084667],
        },
        Cell {
            n: 8192,
            method: Column::Halton,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 1.0000000, 1.0000000, 1.0000000],
        },
        Cell {
            n: 32767,
            method: Column::Lp,
            refined: false,
            value: 1.4175885,
            point: &[1.1044006, 1.1336975, 0.9775085, 1.0236511],
        },
        Cell {
            n: 32767,
            method: Column::Lp,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 1.0000000, 1.0000000, 1.0000000],
        },
        Cell {
            n: 32767,
            method: Column::Halton,
            refined: false,
            value: 0.8959908,
            point: &[0.8909912, 0.7892090, 1.0955520, 1.1084667],
        },
        Cell {
            n: 32767,
            method: Column::Halton,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 1.0000000, 1.0000000, 1.0000000],
        },
        Cell {
            n: 65535,
            method: Column::Lp,
            refined: false,
            value: 0.1698878,
            point: &[0.7766876, 0.6017303, 1.1534271, 1.3391876],
        },
        Cell {
            n: 65535,
            method: Column::Lp,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 1.0000000, 1.0000000, 1.0000000],
        },
        Cell {
            n: 65535,
            method: Column::Halton,
            refined: false,
            value: 0.8959908,
            point: &[0.8909912, 0.7892090, 1.0955520, 1.1084667],
        },
        Cell {
            n: 65535,
            method: Column::Halton,
            refined: true,
            value: 0.0000000,
            point: &[1.0000000, 1.0000000, 1.0000000, 1.0000000],
        },
    ],
};

pub const COSINE_SPHERE: ResultTable = ResultTable {
    function: 5,
    cells: &[
        Cell {
            n: 2000,
            method: Column::Lp,
            refined: false,
            value: -2.000000,
            point: &[0.000000, 0.000000],
        },
        Cell {
            n: 2000,
            method: Column::Lp,
            refined: true,
            value: -2.000000,
            point: &[0.000000, 0.000000],
        },
        Cell {
            n: 2000,
            method: Column::Halton,
            refined: false,
            value: -1.817494,
            point: &[-0.363281, -0.010517],
        },
        Cell {
            n: 2000,
            method: Column::Halton,
            refined: true,
            value: -1.878901,
            point: &[-0.346924, -0.000000],
        },
        Cell {
            n: 8192,
            method: Column::Lp,
            refined: false,
            value: -2.000000,
            point: &[0.000000, 0.000000],
        },
        Cell {
            n: 8192,
            method: Column::Lp,
            refined: true,
            value: -2.000000,
            point: &[0.000000, 0.000000],
        },
        Cell {
            n: 8192,
            method: Column::Halton,
            refined: false,
            value: -1.860544,
            point: &[0.008789, -0.340954],
        },
        Cell {
            n: 8192,
            method: Column::Halton,
            refined: true,
            value: -1.878901,
            point: &[-0.000000, -0.346924],
        },
        Cell {
            n: 32767,
            method: Column::Lp,
            refined: false,
            value: -2.000000,
            point: &[0.000000, 0.000000],
        },
        Cell {
            n: 32767,
            method: Column::Lp,
            refined: true,
            value: -2.000000,
            point: &[0.000000, 0.000000],
        },
        Cell {
            n: 32767,
            method: Column::Halton,
            refined: false,
            value: -1.963421,
            point: &[-0.012817, -0.007807],
        },
        Cell {
            n: 32767,
            method: Column::Halton,
            refined: true,
            value: -2.000000,
            point: &[0.000000, -0.000000],
        },
        Cell {
            n: 65535,
            method: Column::Lp,
            refined: false,
            value: -2.000000,
            point: &[0.000000, 0.000000],
        },
        Cell {
            n: 65535,
            method: Column::Lp,
            refined: true,
            value: -2.000000,
            point: &[0.000000, 0.000000],
        },
        Cell {
            n: 65535,
            method: Column::Halton,
            refined: false,
            value: -1.996424,
            point: &[0.004578, 0.000999],
        },
        Cell {
            n: 65535,
            method: Column::Halton,
            refined: true,
            value: -2.000000,
            point: &[-0.000000, -0.000000],
        },
    ],
};

pub const HIMMELBLAU: ResultTable = ResultTable {
    function: 6,
    cells: &[
        Cell {
            n: 2000,
            method: Column::Lp,
            refined: false,
            value: -21.28223,
            point: &[
                6.132746, 6.398238, 8.006809, 8.537793, 9.552910, 7.897488, 8.537793, 5.757934, 9.131246, 8.428473,
            ],
        },
        Cell {
            n: 2000,
            method: Column::Lp,
            refined: true,
            value: -45.77846,
            point: &[
                9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265,
            ],
        },
        Cell {
            n: 2000,
            method: Column::Halton,
            refined: false,
            value: -24.99797,
            point: &[
                9.798881, 9.398390, 9.184327, 6.934143, 9.139471, 7.850690, 7.620776, 8.295979, 6.764638, 7.155517,
            ],
        },
        Cell {
            n: 2000,
            method: Column::Halton,
            refined: true,
            value: -45.77846,
            point: &[
                9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265,
            ],
        },
        Cell {
            n: 65535,
            method: Column::Lp,
            refined: false,
            value: -37.85620,
            point: &[
                8.814022, 9.325485, 9.040471, 8.489965, 8.763266, 7.385049, 8.409927, 8.878443, 9.042423, 8.958481,
            ],
        },
        Cell {
            n: 65535,
            method: Column::Lp,
            refined: true,
            value: -45.77846,
            point: &[
                9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265,
            ],
        },
        Cell {
            n: 65535,
            method: Column::Halton,
            refined: false,
            value: -35.07950,
            point: &[
                9.319751, 8.630329, 7.693310, 9.382510, 8.223152, 8.532420, 7.939859, 8.213517, 8.880209, 8.766924,
            ],
        },
        Cell {
            n: 65535,
            method: Column::Halton,
            refined: true,
            value: -45.77846,
            point: &[
                9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265, 9.350265,
            ],
        },
    ],
};
