#pragma once

#include "touchdown/model.hpp"

#include <vector>

namespace touchdown::reference {

/// Published OP1 optimum: inputs, (tau, beta, K), and the printed H, G, S, rho.
struct Op1Row {
    ProblemParams params;
    double tau, beta, K;
    double H, G, S, rho;
};

/// Published OP2 optimum.
struct Op2Row {
    ProblemParams params;
    double tau, eta, beta, K;
    double G_Tbar, H_t0, G_t0, S_Tbar, S_t0, rho2, rho;
};

/// Published OP3 optimum.
struct Op3Row {
    ProblemParams params;
    double tau, beta, K;
    double Gstar, S_t0, rho2, lambda, rho;
};

/// Summary rows: inputs with the OP1 and OP3 optima side by side.
struct SummaryRow {
    ProblemParams params;
    double rho_op1, rho_op3;
};

/// Summary of OP2 optima for mu between mu0 and mu1.
struct Op2SummaryRow {
    ProblemParams params;
    double rho;
};

const std::vector<SummaryRow>& table1();
const std::vector<Op2SummaryRow>& table2();
const std::vector<Op1Row>& table3();
const std::vector<Op2Row>& table4();
const std::vector<Op3Row>& table5();

} // namespace touchdown::reference
