#pragma once

// Real polynomials on [0,1] in the monomial basis: the weights P in the
// Dirichlet polynomials D_N(s, P) and the coefficient arithmetic behind the
// closed-form main terms (products, derivatives, antiderivatives, and exact
// integrals over [0,1]).

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace zetalab {

class WeightPolynomial {
public:
    WeightPolynomial() : coeffs_{0.0} {}
    explicit WeightPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(0.0);
    }

    static WeightPolynomial one() { return WeightPolynomial{{1.0}}; }
    static WeightPolynomial zero() { return WeightPolynomial{{0.0}}; }

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<double>& coefficients() const { return coeffs_; }

    double operator()(double x) const {
        double acc = 0.0;
        for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * x + coeffs_[j];
        return acc;
    }

    WeightPolynomial derivative() const {
        if (coeffs_.size() == 1) return zero();
        std::vector<double> out(coeffs_.size() - 1);
        for (std::size_t j = 1; j < coeffs_.size(); ++j) out[j - 1] = coeffs_[j] * static_cast<double>(j);
        return WeightPolynomial(std::move(out));
    }

    // Antiderivative with constant term 0.
    WeightPolynomial antiderivative() const {
        std::vector<double> out(coeffs_.size() + 1, 0.0);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) out[j + 1] = coeffs_[j] / static_cast<double>(j + 1);
        return WeightPolynomial(std::move(out));
    }

    double integral_01() const {
        double acc = 0.0;
        for (std::size_t j = 0; j < coeffs_.size(); ++j) acc += coeffs_[j] / static_cast<double>(j + 1);
        return acc;
    }

    WeightPolynomial operator*(const WeightPolynomial& rhs) const {
        std::vector<double> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        return WeightPolynomial(std::move(out));
    }

    WeightPolynomial operator+(const WeightPolynomial& rhs) const {
        std::vector<double> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
        return WeightPolynomial(std::move(out));
    }

    WeightPolynomial scaled(double factor) const {
        std::vector<double> out = coeffs_;
        for (double& c : out) c *= factor;
        return WeightPolynomial(std::move(out));
    }

    // Multiply by x^k.
    WeightPolynomial shifted_up(std::size_t k) const {
        std::vector<double> out(coeffs_.size() + k, 0.0);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) out[j + k] = coeffs_[j];
        return WeightPolynomial(std::move(out));
    }

    bool is_zero() const {
        for (double c : coeffs_)
            if (c != 0.0) return false;
        return true;
    }

private:
    std::vector<double> coeffs_;
};

}  // namespace zetalab
