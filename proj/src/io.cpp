#include "roofbasis/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace roofbasis {

namespace {

long long parse_ll(const std::string& s) {
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse: expected integer, got '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("parse: trailing garbage in '" + s + "'");
  return v;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::string format_set(const IntegerSet& j) {
  std::ostringstream os;
  os << "n=" << j.n << ";<=" << j.tail << ";";
  for (size_t t = 0; t < j.above.size(); ++t) {
    if (t) os << ",";
    os << j.above[t];
  }
  return os.str();
}

IntegerSet parse_set(const std::string& text) {
  const std::string s = trim(text);
  if (s.rfind("n=", 0) != 0) throw std::invalid_argument("parse_set: literal must start with n=");
  const size_t semi1 = s.find(';');
  if (semi1 == std::string::npos) throw std::invalid_argument("parse_set: missing ';' after modulus");
  const long long n = parse_ll(trim(s.substr(2, semi1 - 2)));
  if (n < 2 || n > 1000000) throw std::invalid_argument("parse_set: modulus out of range");
  std::string rest = s.substr(semi1 + 1);
  if (rest.rfind("<=", 0) != 0) throw std::invalid_argument("parse_set: expected <=tail segment");
  const size_t semi2 = rest.find(';');
  if (semi2 == std::string::npos) throw std::invalid_argument("parse_set: missing ';' after tail");
  const long long tail = parse_ll(trim(rest.substr(2, semi2 - 2)));
  std::string list = rest.substr(semi2 + 1);
  std::vector<long long> elems;
  std::string token;
  std::istringstream is(list);
  while (std::getline(is, token, ',')) {
    token = trim(token);
    if (token.empty()) continue;
    elems.push_back(parse_ll(token));
  }
  return canonicalize(static_cast<int>(n), tail, std::move(elems));
}

nlohmann::json set_to_json(const IntegerSet& j) {
  return nlohmann::json{{"n", j.n}, {"tail", j.tail}, {"above", j.above}};
}

IntegerSet set_from_json(const nlohmann::json& obj) {
  if (!obj.is_object() || !obj.contains("n") || !obj.contains("tail") || !obj.contains("above"))
    throw std::invalid_argument("set_from_json: expected {n, tail, above}");
  return canonicalize(obj.at("n").get<int>(), obj.at("tail").get<long long>(),
                      obj.at("above").get<std::vector<long long>>());
}

std::string format_word(const ReducedWord& w) {
  std::ostringstream os;
  for (size_t t = 0; t < w.letters.size(); ++t) {
    if (t) os << " ";
    os << "s" << w.letters[t];
  }
  return w.letters.empty() ? "e" : os.str();
}

std::string format_word_compact(const ReducedWord& w) {
  std::ostringstream os;
  for (size_t t = 0; t < w.letters.size(); ++t) {
    if (t) os << ",";
    os << w.letters[t];
  }
  return os.str();
}

ReducedWord parse_word(int n, const std::string& text) {
  if (n < 2) throw std::invalid_argument("parse_word: modulus must be at least 2");
  ReducedWord w;
  w.n = n;
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), ',', ' ');
  std::istringstream is(norm);
  std::string token;
  while (is >> token) {
    if (!token.empty() && (token[0] == 's' || token[0] == 'S')) token = token.substr(1);
    const long long v = parse_ll(token);
    if (v < 0 || v >= n) throw std::invalid_argument("parse_word: letter out of range");
    w.letters.push_back(static_cast<int>(v));
  }
  return w;
}

std::string format_weight(const Weight& w) {
  std::ostringstream os;
  os << "Lambda_" << w.label << " - [";
  for (size_t c = 0; c < w.alpha.size(); ++c) {
    if (c) os << ",";
    os << w.alpha[c];
  }
  os << "]";
  return os.str();
}

nlohmann::json weight_to_json(const Weight& w) {
  return nlohmann::json{{"label", w.label}, {"alpha", w.alpha}};
}

std::string term_dump(const FockVector& v) {
  std::vector<const IntegerSet*> keys;
  keys.reserve(v.size());
  for (const auto& [k, c] : v) keys.push_back(&k);
  std::sort(keys.begin(), keys.end(), [](const IntegerSet* a, const IntegerSet* b) {
    return lex_compare(*a, *b) > 0;
  });
  std::ostringstream os;
  for (const IntegerSet* k : keys)
    os << v.at(*k) << " * " << format_set(*k) << "\n";
  return os.str();
}

nlohmann::json fock_to_json(const FockVector& v) {
  std::vector<const IntegerSet*> keys;
  keys.reserve(v.size());
  for (const auto& [k, c] : v) keys.push_back(&k);
  std::sort(keys.begin(), keys.end(), [](const IntegerSet* a, const IntegerSet* b) {
    return lex_compare(*a, *b) > 0;
  });
  nlohmann::json terms = nlohmann::json::array();
  for (const IntegerSet* k : keys) {
    terms.push_back(nlohmann::json{{"coeff", v.at(*k).str()}, {"key", set_to_json(*k)}});
  }
  return terms;
}

std::string dot_chain(const IntegerSet& start, const std::vector<UpStep>& steps) {
  std::ostringstream os;
  os << "digraph chain {\n";
  IntegerSet cur = start;
  os << "  \"" << format_set(cur) << "\";\n";
  for (const UpStep& s : steps) {
    std::vector<long long> elems;
    for (long long x : cur.above)
      if (x != s.p) elems.push_back(x);
    elems.push_back(s.q);
    IntegerSet next = canonicalize(cur.n, cur.tail, std::move(elems));
    os << "  \"" << format_set(cur) << "\" -> \"" << format_set(next) << "\" [label=\"" << s.p
       << "->" << s.q << "\"];\n";
    cur = std::move(next);
  }
  os << "}\n";
  return os.str();
}

std::string dot_crystal(const std::vector<IntegerSet>& elems) {
  std::set<IntegerSet> members(elems.begin(), elems.end());
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (const IntegerSet& j : elems) os << "  \"" << format_set(j) << "\";\n";
  for (const IntegerSet& j : elems) {
    for (int i = 0; i < j.n; ++i) {
      const auto moved = crystal_f(i, j);
      if (moved && members.count(*moved))
        os << "  \"" << format_set(j) << "\" -> \"" << format_set(*moved) << "\" [label=\"" << i
           << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace roofbasis
