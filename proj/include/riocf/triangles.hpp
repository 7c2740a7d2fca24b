#pragma once

#include "riocf/cfrac.hpp"
#include "riocf/riordan.hpp"

#include <string>
#include <vector>

namespace riocf {

// names: binomial, narayana, narayana_shifted, nb_product, nb_conjugate,
// delannoy_signed, schroeder_peaks
Triangle named_triangle(const std::string& name, size_t n);

Triangle triangle_mul(const Triangle& t1, const Triangle& t2);
Triangle triangle_inv(const Triangle& t);
Triangle identity_triangle(size_t n);

struct NarayanaCfSuite {
    CFrac jacobi;             // bivariate Narayana GF
    CFrac thron;              // same GF, resolved periodic tail
    CFrac thron_rejected;     // the competing tail reading; differs from row 4 on
    CFrac shifted_thron;      // column-shifted Narayana
    CFrac little_q_stieltjes;
    CFrac little_q_thron;
    CFrac little_q_jacobi;
    CFrac nb_product_jacobi;
    CFrac nb_product_thron;
    CFrac nb_conjugate_jacobi;
    CFrac alternating_thron;  // 1 + x * (GF of schroeder_alternating_transform)
};

NarayanaCfSuite narayana_cf_suite();

enum class TransformDirection { Forward, Inverse };

std::vector<Rational> binomial_transform(const std::vector<Rational>& seq,
                                         TransformDirection dir);

// n-th term: sum_k C(n+1+k, 2k) (-1)^(n+1-k) S_k over large Schroeder numbers,
// offset so the output meets the nb_conjugate diagonal sums at index 0
std::vector<Rational> schroeder_alternating_transform(size_t n);

std::vector<Rational> large_schroeder_numbers(size_t n);

}  // namespace riocf
