#include "tensaheyt/corpus.hpp"

#include <charconv>

#include "tensaheyt/errors.hpp"

namespace tensaheyt {
namespace {

std::size_t parse_count(std::string_view s, std::string_view spec) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw FormatError("bad number '" + std::string(s) + "' in example spec '" + std::string(spec) + "'");
  }
  return v;
}

}  // namespace

TenseHAlgebra build_boolean_product() {
  auto two = build_extreme(chain_algebra(2));
  return product(two, two);
}

std::string frame_spec(std::size_t points, const Relation& r) {
  std::string s = "frame:" + std::to_string(points) + ":";
  bool first = true;
  for (auto [x, y] : r.pairs()) {
    if (!first) s += ',';
    s += std::to_string(x) + "-" + std::to_string(y);
    first = false;
  }
  return s;
}

bool for_each_frame(std::size_t max_points, const std::function<bool(NamedAlgebra)>& visit, const Limits& limits) {
  for (std::size_t k = 1; k <= max_points; ++k) {
    const std::size_t bits = k * k;
    if (bits >= 63) throw CarrierTooLarge("too many relations to enumerate");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      Relation r(k);
      for (std::size_t b = 0; b < bits; ++b) {
        if (mask & (std::uint64_t{1} << b)) r.set(static_cast<Elem>(b / k), static_cast<Elem>(b % k));
      }
      if (!visit({frame_spec(k, r), build_frame_algebra(k, r, limits)})) return false;
    }
  }
  return true;
}

std::vector<NamedAlgebra> frame_corpus(std::size_t max_points, const Limits& limits) {
  std::vector<NamedAlgebra> out;
  for_each_frame(
      max_points,
      [&](NamedAlgebra a) {
        out.push_back(std::move(a));
        return true;
      },
      limits);
  return out;
}

std::vector<NamedAlgebra> standard_corpus() {
  std::vector<NamedAlgebra> out;
  for (std::size_t n = 2; n <= 6; ++n) {
    out.push_back({"extreme:" + std::to_string(n), build_extreme(chain_algebra(n))});
  }
  out.push_back({"ej2", build_ej2()});
  out.push_back({"product", build_boolean_product()});
  for (auto& f : frame_corpus(3)) out.push_back(std::move(f));
  return out;
}

NamedAlgebra build_from_spec(std::string_view spec, const Limits& limits) {
  if (spec == "ej2") return {"ej2", build_ej2()};
  if (spec == "product") return {"product", build_boolean_product()};
  if (spec.starts_with("extreme:")) {
    const auto n = parse_count(spec.substr(8), spec);
    if (n > limits.max_elements) throw CarrierTooLarge("chain longer than the element cap");
    return {std::string(spec), build_extreme(chain_algebra(n))};
  }
  if (spec.starts_with("frame:")) {
    auto rest = spec.substr(6);
    const auto colon = rest.find(':');
    const auto k = parse_count(rest.substr(0, colon), spec);
    Relation r(k);
    if (colon != std::string_view::npos) {
      auto edges = rest.substr(colon + 1);
      while (!edges.empty()) {
        const auto comma = edges.find(',');
        auto edge = edges.substr(0, comma);
        const auto dash = edge.find('-');
        if (dash == std::string_view::npos) {
          throw FormatError("edge '" + std::string(edge) + "' is not of the form x-y");
        }
        const auto x = parse_count(edge.substr(0, dash), spec);
        const auto y = parse_count(edge.substr(dash + 1), spec);
        if (x >= k || y >= k) throw FormatError("edge '" + std::string(edge) + "' names a missing point");
        r.set(static_cast<Elem>(x), static_cast<Elem>(y));
        edges = comma == std::string_view::npos ? std::string_view{} : edges.substr(comma + 1);
      }
    }
    return {frame_spec(k, r), build_frame_algebra(k, r, limits)};
  }
  throw FormatError("unknown example '" + std::string(spec) + "' (expected ej2, product, extreme:N or frame:N:EDGES)");
}

}  // namespace tensaheyt
