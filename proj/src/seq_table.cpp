#include "riocf/seq_table.hpp"

#include "riocf/errors.hpp"

namespace riocf {

namespace {

std::vector<Integer> ints(std::initializer_list<long long> v) {
    return std::vector<Integer>(v.begin(), v.end());
}

std::vector<SequenceEntry> build_table() {
    std::vector<SequenceEntry> t;
    t.push_back({"A000045", "Fibonacci numbers, F(0) = 0, F(1) = 1",
                 ints({0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89})});
    t.push_back({"A000108", "Catalan numbers C(2n,n)/(n+1)",
                 ints({1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786})});
    t.push_back({"A000629",
                 "binomial transform of the Fubini numbers; EGF e^x/(2-e^x)",
                 ints({1, 2, 6, 26, 150, 1082, 9366, 94586, 1091670, 14174522,
                       204495126, 3245265146})});
    t.push_back({"A000670", "Fubini numbers (ordered set partitions); EGF 1/(2-e^x)",
                 ints({1, 1, 3, 13, 75, 541, 4683, 47293, 545835, 7087261, 102247563,
                       1622632573})});
    t.push_back({"A001263", "Narayana triangle C(n,k)*C(n+1,k)/(k+1), read by rows",
                 ints({1, 1, 1, 1, 3, 1, 1, 6, 6, 1, 1, 10, 20, 10, 1, 1, 15, 50, 50,
                       15, 1})});
    t.push_back({"A006318", "large Schroeder numbers; GF (1-x-sqrt(1-6x+x^2))/(2x)",
                 ints({1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718,
                       5293446})});
    t.push_back({"A007047",
                 "chains in the power set of an n-set; double binomial transform of "
                 "the Fubini numbers",
                 ints({1, 3, 11, 51, 299, 2163, 18731, 189171, 2183339, 28349043,
                       408990251, 6490530291})});
    t.push_back({"A071356",
                 "Motzkin paths whose horizontal and rise steps both have 2 colors",
                 ints({1, 2, 6, 20, 72, 272, 1064, 4272, 17504, 72896, 307648,
                       1312896})});
    t.push_back({"A078481",
                 "alternating transform of the large Schroeder numbers; diagonal sums "
                 "of the binomial conjugate of the Narayana triangle",
                 ints({1, 1, 3, 7, 19, 53, 153, 453, 1367, 4191, 13015})});
    t.push_back({"A126216",
                 "Schroeder paths of semi-length n with k peaks and no peak at level "
                 "one; Narayana triangle times the binomial matrix, read by rows",
                 ints({1, 2, 1, 5, 5, 1, 14, 21, 9, 1, 42, 84, 56, 14, 1, 132, 330,
                       300, 120, 20, 1})});
    t.push_back({"A151090",
                 "Motzkin paths with 2-colored horizontals and rises above level 0, "
                 "3-colored horizontals and 2-colored rises at level 0",
                 ints({1, 3, 11, 43, 175, 731, 3111, 13427, 58591, 257947, 1143943,
                       5104419})});
    t.push_back({"A155862",
                 "Schroeder paths of length 2n whose rise steps at level 0 have 3 "
                 "colors",
                 ints({1, 4, 22, 130, 790, 4870, 30274, 189202, 1186702, 7461982,
                       47007034, 296527162})});
    t.push_back({"A177896", "binomial conjugate of the Narayana triangle, read by rows",
                 ints({1, 1, 1, 2, 3, 1, 4, 9, 6, 1, 9, 26, 26, 10, 1, 21, 75, 100,
                       60, 15, 1})});
    t.push_back({"A230008",
                 "row sums of the exponential Riordan array generated by "
                 "triangular-number multipliers 1, 3, 6, 10",
                 ints({1, 3, 11, 51, 295, 2055, 16715, 155355, 1624255, 18868575,
                       241112675, 3361168275})});
    return t;
}

}  // namespace

const std::vector<SequenceEntry>& sequence_table() {
    static const std::vector<SequenceEntry> table = build_table();
    return table;
}

std::vector<std::string> identify_sequence(const std::vector<Integer>& terms) {
    if (terms.empty()) throw PreconditionError("EmptyQuery", "no terms to match");
    std::vector<std::string> hits;
    for (const SequenceEntry& e : sequence_table()) {
        if (terms.size() > e.terms.size()) continue;
        bool match = true;
        for (size_t i = 0; i < terms.size() && match; ++i) {
            match = terms[i] == e.terms[i];
        }
        if (match) hits.push_back(e.name);
    }
    return hits;
}

}  // namespace riocf
