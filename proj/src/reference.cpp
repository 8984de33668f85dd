#include "touchdown/reference.hpp"

namespace touchdown::reference {

namespace {

ProblemParams pp(double p, double mu, double f_inf, double d, double d0) {
    ProblemParams out;
    out.p = p;
    out.mu = mu;
    out.f_inf = f_inf;
    out.d = d;
    out.d0 = d0;
    return out;
}

} // namespace

const std::vector<SummaryRow>& table1() {
    static const std::vector<SummaryRow> rows = {
        {pp(2, 1, 1.1, 0.1, 5), 0.1050, 0.2249},
        {pp(2, 2, 2.25, 0.1, 4), 0.1182, 0.2111},
        {pp(2, 3, 3.5, 0.01, 5), 0.1554, 0.2698},
        {pp(2, 6, 6.2, 0.01, 10), 0.1682, 0.2856},
        {pp(2, 10, 10, 0.005, 10), 0.1732, 0.2921},
    };
    return rows;
}

const std::vector<Op2SummaryRow>& table2() {
    static const std::vector<Op2SummaryRow> rows = {
        {pp(2, 0.7, 0.8, 0.01, 8), 0.0815},
        {pp(2, 0.6, 0.65, 0.05, 10), 0.0714},
        {pp(2, 0.5, 0.6, 0.001, 6), 0.0137},
        {pp(2, 0.5, 0.5, 0.01, 7), 0.0228},
    };
    return rows;
}

const std::vector<Op1Row>& table3() {
    static const std::vector<Op1Row> rows = {
        {pp(2, 1, 1.1, 0.1, 5), 0.7904, 1.74, 1.4787, 0.9220, 0.9140, 0.8452, 0.1050},
        {pp(2, 1.25, 1.3, 0.1, 3), 0.8094, 1.56, 1.1117, 0.8807, 0.8754, 0.7429, 0.1010},
        {pp(2, 2, 2.25, 0.1, 4), 0.8111, 1.22, 0.7184, 0.7629, 0.7650, 0.8966, 0.1182},
        {pp(2, 2, 2.25, 0.05, 4), 0.8201, 1.19, 0.8228, 0.7825, 0.7869, 0.9004, 0.1341},
        {pp(2, 3, 3.5, 0.01, 5), 0.8036, 0.99, 0.7402, 0.7757, 0.7710, 0.9510, 0.1554},
        {pp(2, 4, 4.1, 0.05, 5), 0.8001, 0.91, 0.7407, 0.8211, 0.8182, 0.9574, 0.1436},
        {pp(2, 4, 4.1, 0.01, 5), 0.8286, 0.87, 0.6705, 0.7582, 0.7517, 0.9623, 0.1643},
        {pp(2, 4, 7, 0.01, 5), 0.7905, 0.73, 0.9385, 0.7137, 0.7132, 0.9739, 0.1313},
        {pp(2, 6, 6.2, 0.01, 10), 0.8063, 0.73, 0.7879, 0.8252, 0.8223, 0.9917, 0.1682},
        {pp(2, 10, 10, 0.005, 10), 0.8037, 0.585, 0.6331, 0.7794, 0.7832, 0.9948, 0.1732},
        {pp(1.5, 10, 10, 0.005, 10), 0.7461, 0.585, 0.6298, 0.8390, 0.8335, 0.9932, 0.1857},
        {pp(1, 10, 10, 0.005, 10), 0.6611, 0.585, 0.6, 0.8643, 0.8643, 0.9909, 0.1992},
        {pp(0.5, 10, 10, 0.005, 10), 0.5724, 0.585, 0.48, 0.7972, 0.7991, 0.9877, 0.2157},
    };
    return rows;
}

const std::vector<Op2Row>& table4() {
    static const std::vector<Op2Row> rows = {
        {pp(2, 0.7, 0.8, 0.01, 8), 0.58, 0.80, 2.71, 0.8, 0.6352, 0.7322, 0.9465, 0.6152, 0.8492, 0.1405, 0.0815},
        {pp(2, 0.6, 0.65, 0.05, 10), 0.56, 0.84, 3.05, 1.0, 0.5770, 0.7230, 0.9311, 0.6289, 0.8712, 0.0977, 0.0714},
        {pp(2, 0.5, 0.6, 0.001, 6), 0.38, 0.88, 3.801, 1.1, 0.4824, 0.3440, 0.9323, 0.1357, 0.6551, 0.0187, 0.0137},
        {pp(2, 0.5, 0.5, 0.01, 7), 0.44, 0.84, 4.01, 0.9, 0.4907, 0.4068, 0.8983, 0.2167, 0.6865, 0.0304, 0.0228},
    };
    return rows;
}

const std::vector<Op3Row>& table5() {
    static const std::vector<Op3Row> rows = {
        {pp(2, 1, 1.1, 0.1, 5), 0.80, 1.66, 0.68, 0.5474, 0.9899, 0.4521, 0.23, 0.2249},
        {pp(2, 1.25, 1.3, 0.1, 3), 0.80, 1.54, 0.56, 0.5735, 0.9809, 0.5423, 0.24, 0.2299},
        {pp(2, 2, 2.25, 0.1, 4), 0.80, 1.14, 0.62, 0.5601, 0.9929, 0.6482, 0.22, 0.2111},
        {pp(2, 2, 2.25, 0.05, 4), 0.78, 1.23, 0.50, 0.5712, 0.9923, 0.6272, 0.26, 0.2502},
        {pp(2, 3, 3.5, 0.01, 5), 0.80, 0.93, 0.64, 0.5591, 0.9968, 0.7106, 0.28, 0.2698},
        {pp(2, 4, 4.1, 0.05, 5), 0.78, 0.91, 0.42, 0.5930, 0.9971, 0.8071, 0.26, 0.2495},
        {pp(2, 4, 4.1, 0.01, 5), 0.72, 1.01, 0.32, 0.5726, 0.9965, 0.7631, 0.28, 0.2769},
        {pp(2, 4, 7, 0.01, 5), 0.74, 0.77, 0.66, 0.4653, 0.9981, 0.5327, 0.23, 0.2232},
        {pp(2, 6, 6.2, 0.01, 10), 0.78, 0.73, 0.46, 0.5957, 0.9994, 0.8529, 0.29, 0.2856},
        {pp(2, 10, 10, 0.005, 10), 0.80, 0.545, 0.52, 0.6007, 0.9997, 0.9310, 0.30, 0.2921},
        {pp(1.5, 10, 10, 0.005, 10), 0.74, 0.545, 0.38, 0.6349, 0.9996, 0.9074, 0.32, 0.3101},
        {pp(1, 10, 10, 0.005, 10), 0.68, 0.525, 0.30, 0.6762, 0.9995, 0.8755, 0.34, 0.3315},
        {pp(0.5, 10, 10, 0.005, 10), 0.62, 0.465, 0.26, 0.7503, 0.9993, 0.8231, 0.37, 0.3689},
    };
    return rows;
}

} // namespace touchdown::reference
