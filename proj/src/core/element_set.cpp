#include "tensaheyt/element_set.hpp"

namespace tensaheyt {

ElementSet make_set(std::size_t n, std::initializer_list<Elem> members) {
  ElementSet s(n);
  for (Elem x : members) s.set(x);
  return s;
}

ElementSet make_set(std::size_t n, const std::vector<Elem>& members) {
  ElementSet s(n);
  for (Elem x : members) s.set(x);
  return s;
}

ElementSet full_set(std::size_t n) {
  ElementSet s(n);
  s.set();
  return s;
}

std::vector<Elem> members(const ElementSet& s) {
  std::vector<Elem> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    out.push_back(static_cast<Elem>(i));
  }
  return out;
}

bool numeric_less(const ElementSet& a, const ElementSet& b) {
  // dynamic_bitset compares equal-width sets from the most significant bit down
  return a < b;
}

std::string format_set(const ElementSet& s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (Elem x : members(s)) {
    if (!first) out += ',';
    out += names.at(x);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace tensaheyt
