#include "treenorm/vector.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace treenorm {

TreeVector TreeVector::indicator(std::span<const Node> nodes) {
  TreeVector v;
  for (const Node& n : nodes) v.entries_[n] = 1;
  return v;
}

void TreeVector::set(const Node& node, Rational value) {
  if (value == 0)
    entries_.erase(node);
  else
    entries_[node] = std::move(value);
}

Rational TreeVector::at(const Node& node) const {
  auto it = entries_.find(node);
  return it == entries_.end() ? Rational(0) : it->second;
}

std::size_t TreeVector::min_support_length() const {
  if (entries_.empty()) throw std::logic_error("empty vector has no support");
  return entries_.begin()->first.length();  // keys sorted by (length, digits)
}

std::size_t TreeVector::max_support_length() const {
  if (entries_.empty()) throw std::logic_error("empty vector has no support");
  return entries_.rbegin()->first.length();
}

Rational TreeVector::l1() const {
  Rational s = 0;
  for (const auto& [node, c] : entries_) s += abs(c);
  return s;
}

Rational TreeVector::l2_sq() const {
  Rational s = 0;
  for (const auto& [node, c] : entries_) s += c * c;
  return s;
}

TreeVector& TreeVector::operator+=(const TreeVector& other) {
  for (const auto& [node, c] : other.entries_) set(node, at(node) + c);
  return *this;
}

TreeVector& TreeVector::operator-=(const TreeVector& other) {
  for (const auto& [node, c] : other.entries_) set(node, at(node) - c);
  return *this;
}

TreeVector& TreeVector::operator*=(const Rational& c) {
  if (c == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [node, value] : entries_) value *= c;
  return *this;
}

TreeVector TreeVector::operator-() const {
  TreeVector v = *this;
  for (auto& [node, value] : v.entries_) value = -value;
  return v;
}

TreeVector parse_vector(std::istream& in) {
  TreeVector v;
  std::set<Node> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim trailing whitespace / CR
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw VectorFormatError("line " + std::to_string(line_no) +
                              ": expected <node><TAB><rational>");
    Node node;
    Rational coeff;
    try {
      node = Node::parse(line.substr(0, tab));
      coeff = parse_rational(line.substr(tab + 1));
    } catch (const std::exception& e) {
      throw VectorFormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!seen.insert(node).second)
      throw VectorFormatError("line " + std::to_string(line_no) +
                              ": duplicate node '" + node.str() + "'");
    v.set(node, coeff);  // a zero coefficient simply contributes nothing
  }
  return v;
}

TreeVector parse_vector_text(const std::string& text) {
  std::istringstream in(text);
  return parse_vector(in);
}

TreeVector load_vector(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw VectorFormatError("cannot open '" + path.string() + "'");
  try {
    return parse_vector(in);
  } catch (const VectorFormatError& e) {
    throw VectorFormatError(path.string() + ": " + e.what());
  }
}

std::string format_vector(const TreeVector& v) {
  std::string out;
  for (const auto& [node, c] : v) {
    out += node.str();
    out += '\t';
    out += to_string(c);
    out += '\n';
  }
  return out;
}

void save_vector(const TreeVector& v, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << format_vector(v);
}

}  // namespace treenorm
