#include "hypercheck/series_spec.hpp"

#include <sstream>

namespace hypercheck {

bool SeriesSpec::terminating() const { return last_term_index().has_value(); }

std::optional<long> SeriesSpec::last_term_index() const {
  std::optional<long> best;
  for (const auto& a : top) {
    if (!a.is_nonpositive_integer()) continue;
    const auto value = a.to_long();
    if (!value) continue;
    const long n = -*value;
    if (!best || n < *best) best = n;
  }
  return best;
}

std::string SeriesSpec::str() const {
  std::ostringstream out;
  out << top.size() << "F" << bottom.size() << "(";
  for (std::size_t i = 0; i < top.size(); ++i) out << (i ? ", " : "") << top[i];
  out << "; ";
  for (std::size_t i = 0; i < bottom.size(); ++i) out << (i ? ", " : "") << bottom[i];
  out << "; " << argument << ")";
  return out.str();
}

SeriesSpec hyp(std::vector<Rational> top, std::vector<Rational> bottom, Rational argument) {
  return SeriesSpec{std::move(top), std::move(bottom), std::move(argument)};
}

}  // namespace hypercheck
