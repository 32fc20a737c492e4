#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "roofbasis/crystal.hpp"
#include "roofbasis/fock.hpp"
#include "roofbasis/integer_set.hpp"
#include "roofbasis/roof.hpp"

namespace roofbasis {

// Canonical literal: n=<n>;<=<tail>;<e1>,<e2>,...  The element list may be
// empty.  parse_set accepts any well-formed literal and canonicalizes.
std::string format_set(const IntegerSet& j);
IntegerSet parse_set(const std::string& text);

nlohmann::json set_to_json(const IntegerSet& j);
IntegerSet set_from_json(const nlohmann::json& obj);

std::string format_word(const ReducedWord& w);          // s2 s1 s0 ...
std::string format_word_compact(const ReducedWord& w);  // 2,1,0
ReducedWord parse_word(int n, const std::string& text);  // comma or space separated

std::string format_weight(const Weight& w);
nlohmann::json weight_to_json(const Weight& w);

// One line per term, "<coeff> * <literal>", keys in descending
// lexicographic order.
std::string term_dump(const FockVector& v);
nlohmann::json fock_to_json(const FockVector& v);

// Up-chain as a DOT digraph; edge labels carry the step "p->q".
std::string dot_chain(const IntegerSet& start, const std::vector<UpStep>& steps);

// Crystal graph on the given vertices: an edge J -> f_i(J) labeled i
// whenever the image stays inside the family.
std::string dot_crystal(const std::vector<IntegerSet>& elems);

}  // namespace roofbasis
