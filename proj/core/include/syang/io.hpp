#pragma once

// Text input (field elements, series, tableaux) and JSON output.
//
// Series grammar: sums and products of integers, w (the extension generator)
// and u^-k, with parentheses; juxtaposition multiplies.  "1+2*u^-1",
// "(1+u^-1)(1+w u^-1)", "1 - 3u^-2".

#include "syang/pbw.hpp"
#include "syang/report.hpp"
#include "syang/shifted.hpp"
#include "syang/supermod.hpp"

#include <stdexcept>
#include <string>

namespace syang {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// "3", "-1", "(1,2)" (coefficients c0 + c1 w), "2+w", "w^2+1".
Fe parse_fe(Field f, const std::string& text);
/// Polynomial in u^-1; the constant term is not forced to be 1.
LaurentTail parse_series(Field f, const std::string& text);
/// "a1,...,ak;b1,...,bl".
Tableau parse_tableau(Field f, const std::string& text);
/// "s12,s21".
ShiftMatrix parse_shift(const std::string& text);

json fe_json(const Fe& x);            // integer over F_p, coefficient list otherwise
json series_json(const LaurentTail& s);
json poly_json(const Poly& p);        // coefficients, low degree first
json matrix_json(const Matrix& m);
json element_json(const AlgebraElement& x);
json module_json(const SuperModule& M);
json shifted_module_json(const ShiftedModule& V);
json tableau_json(const Tableau& A);

}  // namespace syang
