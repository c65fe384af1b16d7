#include "seamrep/diagram.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "seamrep/errors.hpp"

namespace seamrep {

namespace {

int disk_to_index(int left, int right, int disk) {
  return disk < left ? disk : 2 * left + right - 1 - disk;
}

}  // namespace

Diagram::Diagram(int left, int right, std::vector<std::uint8_t> partner)
    : left_(left), right_(right), p_(std::move(partner)) {
  const int n = left_ + right_;
  if (left_ < 0 || right_ < 0 || static_cast<int>(p_.size()) != n || n % 2 != 0 || n > 255)
    throw ShapeMismatch("invalid diagram shape " + std::to_string(left) + "," + std::to_string(right));
  key_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int j = p_[static_cast<size_t>(i)];
    if (j >= n || j == i || p_[static_cast<size_t>(j)] != i) throw ShapeMismatch("pairing is not a perfect matching");
    key_[static_cast<size_t>(disk(i))] = static_cast<std::uint8_t>(disk(j));
  }
  // Noncrossing in disk order: arcs must close in stack order.
  std::vector<int> stack;
  for (int pos = 0; pos < n; ++pos) {
    int other = key_[static_cast<size_t>(pos)];
    if (other > pos) {
      stack.push_back(pos);
    } else {
      if (stack.empty() || stack.back() != other) throw ShapeMismatch("pairing is not planar");
      stack.pop_back();
    }
  }
}

Diagram Diagram::from_pairs(int left, int right, const std::vector<std::pair<Point, Point>>& pairs) {
  std::vector<std::uint8_t> p(static_cast<size_t>(left + right), 255);
  auto idx = [&](const Point& pt) {
    int i = pt.side == Side::Left ? pt.index - 1 : left + pt.index - 1;
    int lim = pt.side == Side::Left ? left : right;
    if (pt.index < 1 || pt.index > lim) throw IndexOutOfRange("diagram point out of range");
    return i;
  };
  for (const auto& [a, b] : pairs) {
    int i = idx(a), j = idx(b);
    if (p[static_cast<size_t>(i)] != 255 || p[static_cast<size_t>(j)] != 255 || i == j)
      throw ShapeMismatch("point used twice");
    p[static_cast<size_t>(i)] = static_cast<std::uint8_t>(j);
    p[static_cast<size_t>(j)] = static_cast<std::uint8_t>(i);
  }
  for (auto v : p)
    if (v == 255) throw ShapeMismatch("unpaired point");
  return Diagram(left, right, std::move(p));
}

Point Diagram::point(int idx) const {
  return idx < left_ ? Point{Side::Left, idx + 1} : Point{Side::Right, idx - left_ + 1};
}

int Diagram::index_of(const Point& pt) const {
  return pt.side == Side::Left ? pt.index - 1 : left_ + pt.index - 1;
}

int Diagram::through_count() const {
  int c = 0;
  for (int i = 0; i < left_; ++i)
    if (p_[static_cast<size_t>(i)] >= left_) ++c;
  return c;
}

std::vector<std::pair<Point, Point>> Diagram::pairs() const {
  std::vector<std::pair<Point, Point>> out;
  for (int pos = 0; pos < size(); ++pos) {
    int other = key_[static_cast<size_t>(pos)];
    if (other < pos) continue;
    out.emplace_back(point(disk_to_index(left_, right_, pos)), point(disk_to_index(left_, right_, other)));
  }
  return out;
}

std::string Diagram::to_string() const {
  std::ostringstream os;
  os << left_ << "," << right_ << ":[";
  bool first = true;
  for (const auto& [a, b] : pairs()) {
    if (!first) os << ",";
    first = false;
    os << "(" << (a.side == Side::Left ? "L" : "R") << a.index << "," << (b.side == Side::Left ? "L" : "R")
       << b.index << ")";
  }
  os << "]";
  return os.str();
}

Diagram Diagram::parse(const std::string& text) {
  static const std::regex head(R"(^\s*(\d+)\s*,\s*(\d+)\s*:\s*\[(.*)\]\s*$)");
  static const std::regex pair(R"(\(\s*([LR])(\d+)\s*,\s*([LR])(\d+)\s*\))");
  std::smatch m;
  if (!std::regex_match(text, m, head)) throw ParseError("bad diagram text: " + text);
  int left = std::stoi(m[1]), right = std::stoi(m[2]);
  std::string body = m[3];
  std::vector<std::pair<Point, Point>> pairs;
  for (std::sregex_iterator it(body.begin(), body.end(), pair), end; it != end; ++it) {
    const auto& pm = *it;
    Point a{pm[1] == "L" ? Side::Left : Side::Right, std::stoi(pm[2])};
    Point b{pm[3] == "L" ? Side::Left : Side::Right, std::stoi(pm[4])};
    pairs.emplace_back(a, b);
  }
  return from_pairs(left, right, pairs);
}

bool operator<(const Diagram& a, const Diagram& b) {
  if (a.left_ != b.left_) return a.left_ < b.left_;
  if (a.right_ != b.right_) return a.right_ < b.right_;
  return a.key_ < b.key_;
}

std::size_t Diagram::hash() const {
  std::size_t h = static_cast<std::size_t>(left_) * 1000003u + static_cast<std::size_t>(right_);
  for (auto v : p_) h = h * 131u + v;
  return h;
}

Diagram identity(int n) {
  std::vector<std::uint8_t> p(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    p[static_cast<size_t>(i)] = static_cast<std::uint8_t>(n + i);
    p[static_cast<size_t>(n + i)] = static_cast<std::uint8_t>(i);
  }
  return Diagram(n, n, std::move(p));
}

Diagram generator(int n, int i) {
  if (i < 1 || i > n - 1) throw IndexOutOfRange("generator E_" + std::to_string(i) + " on " + std::to_string(n));
  std::vector<std::uint8_t> p(static_cast<size_t>(2 * n));
  for (int j = 0; j < n; ++j) {
    p[static_cast<size_t>(j)] = static_cast<std::uint8_t>(n + j);
    p[static_cast<size_t>(n + j)] = static_cast<std::uint8_t>(j);
  }
  int a = i - 1, b = i;
  p[static_cast<size_t>(a)] = static_cast<std::uint8_t>(b);
  p[static_cast<size_t>(b)] = static_cast<std::uint8_t>(a);
  p[static_cast<size_t>(n + a)] = static_cast<std::uint8_t>(n + b);
  p[static_cast<size_t>(n + b)] = static_cast<std::uint8_t>(n + a);
  return Diagram(n, n, std::move(p));
}

ComposeResult compose(const Diagram& d, const Diagram& e) {
  if (d.right() != e.left())
    throw ShapeMismatch("compose (" + std::to_string(d.left()) + "," + std::to_string(d.right()) + ") with (" +
                        std::to_string(e.left()) + "," + std::to_string(e.right()) + ")");
  const int a = d.left(), b = d.right(), c = e.right();
  std::vector<std::uint8_t> out(static_cast<size_t>(a + c), 255);
  std::vector<char> seen(static_cast<size_t>(b), 0);

  // Walk from a D-point entering the interface at j until we leave through an outer point.
  auto walk_from_interface_into_e = [&](int j) -> int {
    for (;;) {
      seen[static_cast<size_t>(j)] = 1;
      int z = e.partner(j);
      if (z >= b) return a + (z - b);
      seen[static_cast<size_t>(z)] = 1;
      int y = d.partner(a + z);
      if (y < a) return y;
      j = y - a;
    }
  };
  auto walk_from_interface_into_d = [&](int j) -> int {
    for (;;) {
      seen[static_cast<size_t>(j)] = 1;
      int y = d.partner(a + j);
      if (y < a) return y;
      seen[static_cast<size_t>(y - a)] = 1;
      int z = e.partner(y - a);
      if (z >= b) return a + (z - b);
      j = z;
    }
  };
  for (int i = 0; i < a; ++i) {
    if (out[static_cast<size_t>(i)] != 255) continue;
    int y = d.partner(i);
    int end = y < a ? y : walk_from_interface_into_e(y - a);
    out[static_cast<size_t>(i)] = static_cast<std::uint8_t>(end);
    out[static_cast<size_t>(end)] = static_cast<std::uint8_t>(i);
  }
  for (int k = 0; k < c; ++k) {
    if (out[static_cast<size_t>(a + k)] != 255) continue;
    int z = e.partner(b + k);
    int end = z >= b ? a + (z - b) : walk_from_interface_into_d(z);
    out[static_cast<size_t>(a + k)] = static_cast<std::uint8_t>(end);
    out[static_cast<size_t>(end)] = static_cast<std::uint8_t>(a + k);
  }
  int loops = 0;
  for (int j = 0; j < b; ++j) {
    if (seen[static_cast<size_t>(j)]) continue;
    ++loops;
    int cur = j;
    do {
      seen[static_cast<size_t>(cur)] = 1;
      int z = e.partner(cur);  // interface -> interface through E
      seen[static_cast<size_t>(z)] = 1;
      cur = d.partner(a + z) - a;  // back through D
    } while (cur != j);
  }
  return {Diagram(a, c, std::move(out)), loops};
}

Diagram reflect(const Diagram& d) {
  const int a = d.left(), b = d.right();
  auto map = [&](int idx) { return idx < a ? b + idx : idx - a; };
  std::vector<std::uint8_t> p(static_cast<size_t>(a + b));
  for (int i = 0; i < a + b; ++i) p[static_cast<size_t>(map(i))] = static_cast<std::uint8_t>(map(d.partner(i)));
  return Diagram(b, a, std::move(p));
}

Diagram tensor(const Diagram& x, const Diagram& y) {
  const int a = x.left() + y.left(), b = x.right() + y.right();
  auto mx = [&](int idx) { return idx < x.left() ? idx : a + (idx - x.left()); };
  auto my = [&](int idx) { return idx < y.left() ? x.left() + idx : a + x.right() + (idx - y.left()); };
  std::vector<std::uint8_t> p(static_cast<size_t>(a + b));
  for (int i = 0; i < x.size(); ++i) p[static_cast<size_t>(mx(i))] = static_cast<std::uint8_t>(mx(x.partner(i)));
  for (int i = 0; i < y.size(); ++i) p[static_cast<size_t>(my(i))] = static_cast<std::uint8_t>(my(y.partner(i)));
  return Diagram(a, b, std::move(p));
}

namespace {

// Noncrossing perfect matchings of positions [lo, hi) written into m.
void matchings(int lo, int hi, std::vector<int>& m, const std::function<void()>& emit) {
  if (lo >= hi) {
    emit();
    return;
  }
  for (int j = lo + 1; j < hi; j += 2) {
    m[static_cast<size_t>(lo)] = j;
    m[static_cast<size_t>(j)] = lo;
    matchings(lo + 1, j, m, [&] { matchings(j + 1, hi, m, emit); });
  }
}

}  // namespace

std::vector<Diagram> enumerate_shape(int a, int b) {
  if ((a + b) % 2 != 0) throw ParityMismatch("odd number of points");
  std::vector<Diagram> out;
  const int n = a + b;
  std::vector<int> m(static_cast<size_t>(n));
  matchings(0, n, m, [&] {
    std::vector<std::uint8_t> p(static_cast<size_t>(n));
    for (int pos = 0; pos < n; ++pos)
      p[static_cast<size_t>(disk_to_index(a, b, pos))] =
          static_cast<std::uint8_t>(disk_to_index(a, b, m[static_cast<size_t>(pos)]));
    out.emplace_back(a, b, std::move(p));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Diagram> enumerate_all(int n) { return enumerate_shape(n, n); }

std::vector<Diagram> enumerate_monic(int n, int d) {
  if (d < 0 || d > n || (n - d) % 2 != 0) throw ParityMismatch("monic (" + std::to_string(n) + "," + std::to_string(d) + ")");
  std::vector<Diagram> out;
  std::vector<std::uint8_t> p(static_cast<size_t>(n + d));
  std::vector<int> stack;
  // Left points are either defects (only at nesting depth 0), arc openers or arc closers.
  std::function<void(int, int)> rec = [&](int pos, int defects) {
    const int remaining = n - pos;
    if (remaining == 0) {
      if (stack.empty() && defects == d) out.emplace_back(n, d, p);
      return;
    }
    if (static_cast<int>(stack.size()) + (d - defects) > remaining) return;
    if (stack.empty() && defects < d) {
      p[static_cast<size_t>(pos)] = static_cast<std::uint8_t>(n + defects);
      p[static_cast<size_t>(n + defects)] = static_cast<std::uint8_t>(pos);
      rec(pos + 1, defects + 1);
    }
    if (!stack.empty()) {
      int o = stack.back();
      stack.pop_back();
      p[static_cast<size_t>(pos)] = static_cast<std::uint8_t>(o);
      p[static_cast<size_t>(o)] = static_cast<std::uint8_t>(pos);
      rec(pos + 1, defects);
      stack.push_back(o);
    }
    stack.push_back(pos);
    rec(pos + 1, defects);
    stack.pop_back();
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

long long binomial(long long n, long long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  long long v = 1;
  for (long long i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}

long long catalan(int n) { return binomial(2LL * n, n) / (n + 1); }

}  // namespace seamrep
