#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <span>
#include <string>

#include "treenorm/rational.hpp"
#include "treenorm/tree.hpp"

namespace treenorm {

// A finitely supported Node -> rational map. Zero coefficients are never
// stored, so the key set is exactly the support.
class TreeVector {
 public:
  TreeVector() = default;

  static TreeVector indicator(std::span<const Node> nodes);

  // Setting a zero erases the entry.
  void set(const Node& node, Rational value);
  Rational at(const Node& node) const;  // 0 off support

  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  std::size_t min_support_length() const;  // empty() must be false
  std::size_t max_support_length() const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Rational l1() const;     // sum of |coefficients|
  Rational l2_sq() const;  // sum of squared coefficients

  TreeVector& operator+=(const TreeVector& other);
  TreeVector& operator-=(const TreeVector& other);
  TreeVector& operator*=(const Rational& c);
  friend TreeVector operator+(TreeVector a, const TreeVector& b) { return a += b; }
  friend TreeVector operator-(TreeVector a, const TreeVector& b) { return a -= b; }
  friend TreeVector operator*(const Rational& c, TreeVector v) { return v *= c; }
  TreeVector operator-() const;

  bool operator==(const TreeVector&) const = default;

 private:
  std::map<Node, Rational> entries_;
};

struct VectorFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Line-oriented text format: `<node><TAB><rational>` per entry, where the
// rational is `p/q` or an integer `p`; `#` starts a comment. Duplicate node
// lines are an error (no silent summing). Diagnostics carry line numbers.
TreeVector parse_vector(std::istream& in);
TreeVector parse_vector_text(const std::string& text);
TreeVector load_vector(const std::filesystem::path& path);

std::string format_vector(const TreeVector& v);
void save_vector(const TreeVector& v, const std::filesystem::path& path);

}  // namespace treenorm
