#include "cayley/io.hpp"

#include <fstream>

#include "cayley/error.hpp"

namespace cayley {

namespace {

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  for (char c : s)
    if (!isdigit(static_cast<unsigned char>(c))) return false;
  out = std::stoi(s);
  return true;
}

} // namespace

FiniteGroup load_group(const std::string& source) {
  if (source == "S3") return FiniteGroup::symmetric3();
  if (source == "D4") return FiniteGroup::dihedral4();
  if (source == "Q8") return FiniteGroup::quaternion8();
  if (!source.empty() && source[0] == 'Z') {
    auto x = source.find('x');
    if (x == std::string::npos) {
      int n;
      if (parse_int(source.substr(1), n)) return FiniteGroup::cyclic(n);
    } else {
      int a, b;
      std::string right = source.substr(x + 1);
      if (!right.empty() && right[0] == 'Z' && parse_int(source.substr(1, x - 1), a) &&
          parse_int(right.substr(1), b))
        return FiniteGroup::direct_product(FiniteGroup::cyclic(a), FiniteGroup::cyclic(b));
    }
  }
  std::ifstream in(source);
  if (!in) throw DomainError("no-such-group", "unknown builtin and unreadable file: " + source);
  Json j;
  in >> j;
  return group_from_json(j);
}

Json group_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  j["abelian"] = g.abelian();
  j["labels"] = g.labels();
  j["table"] = g.table();
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
  return FiniteGroup::from_table(std::move(labels), std::move(table));
}

Json machine_json(const MealyMachine& m) {
  Json j;
  j["states"] = m.states();
  j["alphabet"] = m.alphabet();
  if (!m.state_labels().empty()) j["state_labels"] = m.state_labels();
  std::vector<std::vector<int>> transition(m.states(), std::vector<int>(m.alphabet()));
  std::vector<std::vector<int>> output(m.states(), std::vector<int>(m.alphabet()));
  for (int q = 0; q < m.states(); ++q)
    for (int a = 0; a < m.alphabet(); ++a) {
      transition[q][a] = m.next(q, a);
      output[q][a] = m.out(q, a);
    }
  j["transition"] = transition;
  j["output"] = output;
  j["invertible"] = m.invertible();
  j["reset"] = m.is_reset();
  return j;
}

std::vector<GenLetter> parse_element_word(const FiniteGroup& g, const std::string& text) {
  std::vector<GenLetter> word;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    int exp = +1;
    std::string label = token;
    if (label.size() > 3 && label.substr(label.size() - 3) == "^-1") {
      exp = -1;
      label = label.substr(0, label.size() - 3);
    }
    int idx = label == "x" ? g.identity() : g.index_of_label(label);
    if (idx < 0) throw DomainError("out-of-range", "unknown generator label: " + label);
    word.push_back({idx, exp});
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '*') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return word;
}

} // namespace cayley
