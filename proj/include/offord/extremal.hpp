#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "offord/graph.hpp"
#include "offord/int_matrix.hpp"

namespace offord {

enum class ExtremalFamily { B, Bprime, D };
ExtremalFamily parse_extremal_family(const std::string& text);
std::string to_string(ExtremalFamily family);

// l x 2^l matrix of all 0/1 columns. Column c is the subset {i+1 : bit i of c}.
IntMatrix all_binary_columns(int l);

// B: all_binary_columns(l). Bprime: the same without its zero column.
// D: rows of all_binary_columns(l) stacked over their complements.
BipartiteGraph build_extremal(ExtremalFamily family, int l);

enum class OrderFamily { KotlovLovaszM, BipartiteRank, CobipartiteCorank };
OrderFamily parse_order_family(const std::string& text);
std::string to_string(OrderFamily family);

std::int64_t extremal_order(OrderFamily family, int r);

// [all_binary_columns(l-1); 1; J - all_binary_columns(l-1)], (2l-1) x 2^(l-1).
IntMatrix template_matrix(int l);

// Whether B is a row/column submatrix of template_matrix(l). Throws
// PreconditionError if B has a zero row or two equal rows or columns.
bool embeds_in_template(const IntMatrix& b, int l);

// 15 x 6 column basis [I6; x; 1; J6 - I6; 1 - x]; x must have weight 2 or 3.
IntMatrix exceptional_basis(const std::vector<int>& x);

// Some x of weight 2 or 3 with Col(B) = Col(exceptional_basis(x)), rows
// taken in the given order. Only checks that fixed row order.
std::optional<std::vector<int>> exceptional_parameter(const IntMatrix& b);

}  // namespace offord
