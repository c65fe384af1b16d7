#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace seamrep {

enum class Side : std::uint8_t { Left, Right };

struct Point {
  Side side;
  int index;  // 1-based, top to bottom
  friend bool operator==(const Point&, const Point&) = default;
};

// Planar (left,right)-diagram. Points are numbered 0..left-1 (left column,
// top to bottom) then left..left+right-1 (right column, top to bottom).
class Diagram {
 public:
  Diagram() = default;
  Diagram(int left, int right, std::vector<std::uint8_t> partner);
  static Diagram from_pairs(int left, int right, const std::vector<std::pair<Point, Point>>& pairs);

  int left() const { return left_; }
  int right() const { return right_; }
  int size() const { return left_ + right_; }
  int partner(int idx) const { return p_[static_cast<size_t>(idx)]; }
  const std::vector<std::uint8_t>& partners() const { return p_; }
  bool is_left(int idx) const { return idx < left_; }
  Point point(int idx) const;
  int index_of(const Point& pt) const;

  int through_count() const;
  bool is_monic() const { return through_count() == right_; }
  bool is_epic() const { return through_count() == left_; }

  // Pairs in disk order (left top->bottom, right bottom->top), sorted by smaller end.
  std::vector<std::pair<Point, Point>> pairs() const;
  std::string to_string() const;
  static Diagram parse(const std::string& text);

  // Lexicographic on the sorted disk-order pairing.
  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }
  friend bool operator<(const Diagram& a, const Diagram& b);
  std::size_t hash() const;

 private:
  int disk(int idx) const { return idx < left_ ? idx : left_ + (left_ + right_ - 1 - idx); }
  int left_ = 0;
  int right_ = 0;
  std::vector<std::uint8_t> p_;
  std::vector<std::uint8_t> key_;  // partner sequence in disk order
};

struct ComposeResult {
  Diagram diagram;
  int loops = 0;
};

Diagram identity(int n);
// E_i on n strands, 1 <= i <= n-1.
Diagram generator(int n, int i);
ComposeResult compose(const Diagram& d, const Diagram& e);
Diagram reflect(const Diagram& d);
// Horizontal juxtaposition: a stacked above b.
Diagram tensor(const Diagram& a, const Diagram& b);

// All (a,b)-diagrams, sorted.
std::vector<Diagram> enumerate_shape(int a, int b);
std::vector<Diagram> enumerate_all(int n);
// Monic (n,d)-diagrams, sorted.
std::vector<Diagram> enumerate_monic(int n, int d);

long long binomial(long long n, long long r);  // 0 outside 0 <= r <= n
long long catalan(int n);

}  // namespace seamrep

template <>
struct std::hash<seamrep::Diagram> {
  std::size_t operator()(const seamrep::Diagram& d) const { return d.hash(); }
};
