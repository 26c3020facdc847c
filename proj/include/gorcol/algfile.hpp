#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gorcol/errors.hpp"
#include "gorcol/field.hpp"

namespace gorcol {

// Parsed .alg file. Line-oriented UTF-8 with '#' comments:
//
//   field rational          (or: field prime <p>)
//   vars x y z
//   ideal x^2, x*y, y^2
//   aux a = x, y            (optional, repeatable; labels are free-form)
//
// The polynomial grammar is the parser's: integer literals, declared
// variable names, ^ (positive integer exponent), *, +, -, parentheses.
struct AlgebraFileData {
  bool rational = false;
  long prime = 0;
  std::vector<std::string> vars;
  std::vector<std::string> ideal_texts;
  std::map<std::string, std::vector<std::string>> aux;
};

namespace detail {

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& t : out) {
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? "" : t.substr(b, e - b + 1);
  }
  return out;
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace detail

inline AlgebraFileData parse_alg_text(const std::string& text,
                                      const std::string& origin) {
  AlgebraFileData data;
  bool have_field = false, have_vars = false, have_ideal = false;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw InputError(origin + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    auto words = detail::split_ws(line);
    if (words.empty()) continue;
    const std::string& key = words[0];
    if (key == "field") {
      if (have_field) fail("duplicate field line");
      have_field = true;
      if (words.size() == 2 && words[1] == "rational") {
        data.rational = true;
      } else if (words.size() == 3 && words[1] == "prime") {
        try {
          data.prime = std::stol(words[2]);
        } catch (...) {
          fail("bad prime '" + words[2] + "'");
        }
        if (!PrimeField::probe_prime(data.prime))
          fail("field modulus " + words[2] + " is not prime");
      } else {
        fail("expected 'field rational' or 'field prime <p>'");
      }
    } else if (key == "vars") {
      if (have_vars) fail("duplicate vars line");
      have_vars = true;
      data.vars.assign(words.begin() + 1, words.end());
      if (data.vars.empty()) fail("vars line needs at least one name");
    } else if (key == "ideal") {
      if (have_ideal) fail("duplicate ideal line");
      have_ideal = true;
      const auto pos = line.find("ideal");
      data.ideal_texts = detail::split_commas(line.substr(pos + 5));
      for (const auto& t : data.ideal_texts)
        if (t.empty()) fail("empty polynomial in ideal list");
    } else if (key == "aux") {
      const auto eq = line.find('=');
      if (eq == std::string::npos || words.size() < 2)
        fail("expected 'aux <label> = <poly>, ...'");
      const std::string label = words[1];
      auto texts = detail::split_commas(line.substr(eq + 1));
      for (const auto& t : texts)
        if (t.empty()) fail("empty polynomial in aux list");
      if (!data.aux.emplace(label, std::move(texts)).second)
        fail("duplicate aux label '" + label + "'");
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  if (!have_field) throw InputError(origin + ": missing field line");
  if (!have_vars) throw InputError(origin + ": missing vars line");
  if (!have_ideal) throw InputError(origin + ": missing ideal line");
  return data;
}

inline AlgebraFileData parse_alg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_alg_text(ss.str(), path);
}

}  // namespace gorcol
