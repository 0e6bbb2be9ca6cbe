#pragma once

// Frozen reference values for the saddle families at Z = N, F = 1: the
// closed-form ring family, the ring-plus-center family, the all-in-a-plane
// ("line") family, and the complete enumerations for N = 4..8. The regression
// and acceptance suites assert against these.

#include <string>
#include <vector>

namespace reftab {

struct RingRow {
    int n;
    double energy, lambda_r, mu, rho, z;
    int n_u;
};

inline const std::vector<RingRow>& ring_rows() {
    static const std::vector<RingRow> rows = {
        {2, -4.5590, 1.2139, 1.2918, 0.6580, 1.1398, 1},
        {3, -7.6673, 1.1054, 2.6226, 0.9036, 1.2779, 2},
        {4, -11.1059, 1.0340, 4.0971, 1.0994, 1.3882, 3},
        {5, -14.8004, 0.9817, 5.7342, 1.2677, 1.4800, 4},
        {6, -18.7044, 0.9409, 8.6800, 1.4175, 1.5587, 8},
        {7, -22.7859, 0.9077, 12.0849, 1.5538, 1.6276, 10},
        {8, -27.0208, 0.8799, 15.9050, 1.6794, 1.6888, 12},
    };
    return rows;
}

struct RingPlusCenterRow {
    int n;
    double energy, lambda_r, mu, z_c, rho, z;
    int n_u;
};

inline const std::vector<RingPlusCenterRow>& ring_plus_center_rows() {
    static const std::vector<RingPlusCenterRow> rows = {
        {4, -10.9398, 1.0271, 4.2423, 1.6543, 1.2996, 1.2718, 3},
        {5, -14.8001, 0.9750, 5.6633, 1.8199, 1.4324, 1.3950, 4},
        {6, -18.8975, 0.9345, 7.2035, 1.9690, 1.5583, 1.4960, 5},
        {7, -23.1867, 0.9015, 8.8984, 2.1054, 1.6775, 1.5813, 6},
        {8, -27.6372, 0.8739, 10.9698, 2.2317, 1.7905, 1.6553, 9},
    };
    return rows;
}

struct LineRow {
    int n;
    double energy, lambda_r, mu, z_min, z_max;
    int n_u;
};

inline const std::vector<LineRow>& line_rows() {
    static const std::vector<LineRow> rows = {
        {3, -7.3902, 1.0981, 3.7040, 1.1143, 1.4666, 3},
        {4, -10.3975, 1.0177, 6.8831, 1.0295, 1.5699, 5},
        {5, -13.5302, 0.9568, 10.7953, 0.9170, 1.7755, 7},
        {6, -16.7566, 0.9082, 15.4282, 0.7898, 1.8639, 9},
        {7, -20.0549, 0.8680, 20.7764, 0.6543, 2.0199, 11},
        {8, -23.4091, 0.8339, 26.8366, 0.5141, 2.0986, 13},
    };
    return rows;
}

struct EnumRow {
    int nu;
    double energy, lambda_r, mu;
    int n_u;
    std::string comment;  // empty where the enumeration has no named family
};

inline const std::vector<EnumRow>& enumeration_rows(int n) {
    static const std::vector<EnumRow> n4 = {
        {1, -11.1059, 1.0340, 4.0971, 3, "all on a ring"},
        {2, -10.9398, 1.0271, 4.2423, 3, "ring plus center"},
        {3, -10.9398, 1.0271, 4.2708, 4, ""},
        {4, -10.3975, 1.0177, 6.8831, 5, "all on a line"},
    };
    static const std::vector<EnumRow> n5 = {
        {1, -14.8004, 0.9817, 5.7342, 4, "all on a ring"},
        {2, -14.8001, 0.9750, 5.6633, 4, "ring plus center"},
        {3, -14.7763, 0.9766, 6.0823, 5, ""},
        {4, -14.3922, 0.9684, 7.8093, 6, ""},
        {5, -13.5302, 0.9568, 10.7953, 7, "all on a line"},
    };
    static const std::vector<EnumRow> n6 = {
        {1, -18.8975, 0.9345, 7.2035, 5, "ring plus center"},
        {2, -18.7634, 0.9350, 7.7165, 6, ""},
        {3, -18.7633, 0.9350, 7.7830, 7, ""},
        {4, -18.7490, 0.9342, 7.9740, 6, ""},
        {5, -18.7055, 0.9402, 8.5282, 7, ""},
        {6, -18.7044, 0.9409, 8.6800, 8, "all on a ring"},
        {7, -18.6476, 0.9293, 8.6653, 7, ""},
        {8, -18.5511, 0.9297, 9.0837, 7, ""},
        {9, -18.2526, 0.9241, 10.2688, 8, ""},
        {10, -17.9228, 0.9205, 11.6055, 8, ""},
        {11, -16.7566, 0.9082, 15.4282, 9, "all on a line"},
    };
    static const std::vector<EnumRow> n7 = {
        {1, -23.1867, 0.9015, 8.8984, 6, "ring plus center"},
        {2, -23.0773, 0.8980, 9.3618, 7, ""},
        {3, -22.9904, 0.8991, 10.1259, 8, ""},
        {4, -22.8409, 0.8980, 10.7743, 8, ""},
        {5, -22.8360, 0.8967, 10.7509, 8, ""},
        {6, -22.8126, 0.9036, 11.3732, 9, ""},
        {7, -22.7859, 0.9077, 12.0849, 10, "all on a ring"},
        {8, -22.7451, 0.8932, 11.2920, 9, ""},
        {9, -22.5550, 0.8904, 12.3631, 9, ""},
        {10, -22.4109, 0.8905, 12.8292, 9, ""},
        {11, -22.0806, 0.8861, 13.8150, 10, ""},
        {12, -22.0804, 0.8861, 13.8850, 11, ""},
        {13, -21.5215, 0.8805, 16.1329, 10, ""},
        {14, -20.0549, 0.8680, 20.7764, 11, "all on a line"},
    };
    static const std::vector<EnumRow> n8 = {
        {1, -27.6592, 0.8699, 10.6553, 7, "two in the center"},
        {2, -27.6523, 0.8698, 10.9875, 8, ""},
        {3, -27.6373, 0.8737, 10.7629, 7, ""},
        {4, -27.6373, 0.8737, 10.7908, 8, ""},
        {5, -27.6372, 0.8739, 10.9698, 9, "ring plus center"},
        {6, -27.6363, 0.8724, 10.9400, 8, ""},
        {7, -27.5495, 0.8679, 11.5053, 9, ""},
        {8, -27.5125, 0.8683, 11.4266, 8, ""},
        {9, -27.5122, 0.8684, 11.5939, 9, ""},
        {10, -27.4471, 0.8667, 12.1438, 9, ""},
        {11, -27.2884, 0.8677, 12.9280, 10, ""},
        {12, -27.2785, 0.8692, 13.1026, 10, ""},
        {13, -27.2537, 0.8650, 13.4763, 10, ""},
        {14, -27.2015, 0.8665, 13.4391, 10, ""},
        {15, -27.1801, 0.8629, 13.4369, 11, ""},
        {16, -27.0793, 0.8741, 14.7803, 11, ""},
        {17, -27.0208, 0.8799, 15.9050, 12, "all on a ring"},
        {18, -26.9869, 0.8639, 14.3969, 10, ""},
        {19, -26.9786, 0.8652, 14.4260, 10, ""},
        {20, -26.9774, 0.8659, 14.7100, 11, ""},
        {21, -26.9033, 0.8608, 14.9062, 11, ""},
        {22, -26.5081, 0.8568, 16.7984, 11, ""},
        {23, -26.3255, 0.8567, 17.2700, 11, ""},
        {24, -26.0390, 0.8534, 18.2821, 12, ""},
        {25, -25.1700, 0.8463, 21.3654, 12, ""},
        {26, -23.4091, 0.8339, 26.8366, 13, "all on a line"},
    };
    static const std::vector<EnumRow> empty;
    switch (n) {
        case 4: return n4;
        case 5: return n5;
        case 6: return n6;
        case 7: return n7;
        case 8: return n8;
        default: return empty;
    }
}

inline int enumeration_count(int n) {
    switch (n) {
        case 2: return 1;
        case 3: return 2;
        default: return static_cast<int>(enumeration_rows(n).size());
    }
}

struct LabelRow {
    int n, nu;
    std::string label;
};

// Symmetry labels of the lowest-lying states, as printed in the projection
// panels for N = 4..8.
inline const std::vector<LabelRow>& panel_labels() {
    static const std::vector<LabelRow> rows = {
        {4, 1, "C4v"}, {4, 2, "C3v"}, {4, 3, "Cv"},  {4, 4, "C2v"},

        {5, 1, "C5v"}, {5, 2, "C4v"}, {5, 3, "Cv"},  {5, 4, "Cv"},  {5, 5, "C2v"},

        {6, 1, "C5v"}, {6, 2, "Cv"},  {6, 3, "C3v"}, {6, 4, "C2v"}, {6, 5, "C2v"},

        {7, 1, "C6v"}, {7, 2, "Cv"},  {7, 3, "Cv"},  {7, 4, "Cv"},  {7, 5, "Cv"},

        {8, 1, "C2v"}, {8, 2, "C2v"}, {8, 3, "Cv"},  {8, 4, "Cv"},  {8, 5, "C7v"},
    };
    return rows;
}

struct SummaryRow {
    int n;
    double energy, mu;
    int count;
    std::string comment;
};

inline const std::vector<SummaryRow>& summary_rows() {
    static const std::vector<SummaryRow> rows = {
        {2, -4.5590, 1.2918, 1, "all on a ring"},
        {3, -7.6673, 2.6226, 2, "all on a ring"},
        {4, -11.1059, 4.0971, 4, "all on a ring"},
        {5, -14.8004, 5.7342, 5, "all on a ring"},
        {6, -18.8975, 7.2035, 11, "ring plus center"},
        {7, -23.1867, 8.8984, 14, "ring plus center"},
        {8, -27.6592, 10.6553, 26, "two in the center"},
    };
    return rows;
}

}  // namespace reftab
