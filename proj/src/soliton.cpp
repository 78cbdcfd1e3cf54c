#include "scsa/soliton.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace scsa {

namespace {

void validate(const SolitonModel& model) {
    if (!(model.chi > 0)) throw InvalidParameterError("nsoliton_signal: chi must be positive");
    if (model.kappas.size() != model.constants.size())
        throw LengthMismatchError("nsoliton_signal: kappas and constants differ in length");
    for (size_t i = 0; i < model.kappas.size(); ++i) {
        if (!(model.kappas[i] > 0))
            throw InvalidParameterError("nsoliton_signal: kappas must be positive");
        if (!(model.constants[i] > 0))
            throw InvalidParameterError("nsoliton_signal: norming constants must be positive");
        for (size_t j = i + 1; j < model.kappas.size(); ++j)
            if (model.kappas[i] == model.kappas[j])
                throw InvalidParameterError("nsoliton_signal: kappas must be distinct");
    }
}

}  // namespace

Signal nsoliton_signal(const SolitonModel& model, const Grid& grid) {
    validate(model);
    const int n = static_cast<int>(model.kappas.size());
    Signal out{grid, std::vector<double>(grid.m, 0.0)};
    if (n == 0) return out;  // det(I) = 1, log is 0

    double kmax = 0.0;
    for (double k : model.kappas) kmax = std::max(kmax, k);
    if (grid.dx > 0.25 / kmax)
        throw GridTooCoarseError("nsoliton_signal: dx exceeds 0.25 / max kappa");

    // g(x) = ln det(I + A); the derivatives come from trace identities,
    //   g'  = tr(B A'),  g'' = tr(B A'') - tr((B A')^2),  B = (I+A)^{-1},
    // so no finite-difference step enters the result.
    Eigen::MatrixXd a(n, n), a2(n, n);
    Eigen::ArrayXXd rate(n, n), coeff(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            rate(i, j) = model.kappas[i] + model.kappas[j];
            coeff(i, j) = model.constants[i] * model.constants[j] / rate(i, j);
        }

    for (int p = 0; p < grid.m; ++p) {
        const double x = grid.x(p);
        a = (coeff * (-rate * x).exp()).matrix();
        a2 = a.cwiseProduct((rate * rate).matrix());

        Eigen::LDLT<Eigen::MatrixXd> ldlt(Eigen::MatrixXd::Identity(n, n) + a);
        if (ldlt.info() != Eigen::Success || (ldlt.vectorD().array() <= 0.0).any())
            throw DegenerateDeterminantError("nsoliton_signal: I + A lost positive definiteness");

        Eigen::MatrixXd ba1 = ldlt.solve((-a.cwiseProduct(rate.matrix())).eval());
        double g2 = ldlt.solve(a2).trace() - (ba1 * ba1).trace();
        double y = 2.0 / model.chi * g2;
        out.samples[p] = y > 0.0 ? y : 0.0;  // clip rounding noise at zero
    }
    return out;
}

double poschl_teller_chi(int n) {
    if (n < 1) throw InvalidParameterError("poschl_teller_chi: N must be >= 1");
    return static_cast<double>(n) * (n + 1);
}

std::vector<double> poschl_teller_kappas(double chi) {
    if (!(chi > 0)) throw InvalidParameterError("poschl_teller_kappas: chi must be positive");
    double s = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * chi));
    std::vector<double> kappas;
    for (double k = s; k > 0.0; k -= 1.0) kappas.push_back(k);
    return kappas;
}

}  // namespace scsa
