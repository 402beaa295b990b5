#include "hypercheck/sweep_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hypercheck/catalog.hpp"
#include "hypercheck/errors.hpp"

namespace hypercheck {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(long line, const std::string& message) {
  throw ConfigError("line " + std::to_string(line) + ": " + message);
}

template <typename T>
T parse_number(std::string_view text, long line, std::string_view key) {
  text = trim(text);
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    fail(line, "bad integer '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

IntRange parse_range(std::string_view text, long line, std::string_view key) {
  text = trim(text);
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const long v = parse_number<long>(text, line, key);
    return {v, v};
  }
  return {parse_number<long>(text.substr(0, dots), line, key), parse_number<long>(text.substr(dots + 2), line, key)};
}

Rational parse_rational(std::string_view text, long line, std::string_view key) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    fail(line, "bad rational for " + std::string(key) + ": " + e.what());
  }
}

void parse_sweep_key(SweepConfig& cfg, std::string_view key, std::string_view value, long line) {
  if (key == "name") {
    cfg.name = value;
  } else if (key == "identity") {
    cfg.identity = value;
  } else if (key == "mode") {
    const auto mode = eval_mode_from_string(value);
    if (!mode) fail(line, "mode must be exact or numeric");
    cfg.mode = *mode;
  } else if (key == "order") {
    cfg.order = parse_number<long>(value, line, key);
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(value, line, key);
  } else if (key == "threads") {
    cfg.threads = parse_number<unsigned>(value, line, key);
  } else {
    fail(line, "unknown key '" + std::string(key) + "' in [sweep]");
  }
}

void parse_sample_key(SamplerSpec& s, std::string_view key, std::string_view value, long line) {
  if (key == "names") {
    s.names.clear();
    for (auto item : split_list(value)) s.names.emplace_back(item);
  } else if (key == "denominators") {
    s.denominators.clear();
    for (auto item : split_list(value)) {
      const long q = parse_number<long>(item, line, key);
      if (q < 2) fail(line, "denominators must be >= 2");
      s.denominators.push_back(q);
    }
    if (s.denominators.empty()) fail(line, "denominators must not be empty");
  } else if (key == "numerator_bound") {
    s.numerator_bound = parse_number<long>(value, line, key);
    if (s.numerator_bound < 1) fail(line, "numerator_bound must be >= 1");
  } else if (key == "count") {
    s.count = parse_number<long>(value, line, key);
    if (s.count < 0) fail(line, "count must be >= 0");
  } else if (key == "combine") {
    if (value == "grid") {
      s.grid = true;
    } else if (value == "tuples") {
      s.grid = false;
    } else {
      fail(line, "combine must be tuples or grid");
    }
  } else if (key.starts_with("bound.")) {
    const long b = parse_number<long>(value, line, key);
    if (b < 1) fail(line, "bound must be >= 1");
    s.bound[std::string(key.substr(6))] = b;
  } else if (key.starts_with("shift.")) {
    s.shift[std::string(key.substr(6))] = parse_number<long>(value, line, key);
  } else {
    fail(line, "unknown key '" + std::string(key) + "' in [sample]");
  }
}

}  // namespace

SweepConfig parse_sweep_config(std::string_view text) {
  SweepConfig cfg;
  std::string section;
  long line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find_first_of("#;"); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "sweep" && section != "ranges" && section != "values" && section != "sample" &&
          section != "numeric") {
        fail(line_no, "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) fail(line_no, "empty key");
    if (section.empty()) fail(line_no, "key outside of a section");

    if (section == "sweep") {
      parse_sweep_key(cfg, key, value, line_no);
    } else if (section == "ranges") {
      cfg.ranges.emplace_back(std::string(key), parse_range(value, line_no, key));
    } else if (section == "values") {
      std::vector<Rational> list;
      for (auto item : split_list(value)) list.push_back(parse_rational(item, line_no, key));
      cfg.values.emplace_back(std::string(key), std::move(list));
    } else if (section == "sample") {
      parse_sample_key(cfg.sample, key, value, line_no);
    } else if (key == "precision_bits") {
      cfg.numeric.precision_bits = parse_number<long>(value, line_no, key);
      if (cfg.numeric.precision_bits < 32) fail(line_no, "precision_bits must be >= 32");
    } else if (key == "abs_err") {
      try {
        cfg.numeric.target_abs_err = Rational::parse_decimal(value);
      } catch (const ParseError& e) {
        fail(line_no, std::string("bad abs_err: ") + e.what());
      }
      if (cfg.numeric.target_abs_err.sign() <= 0) fail(line_no, "abs_err must be positive");
    } else {
      fail(line_no, "unknown key '" + std::string(key) + "' in [numeric]");
    }
  }
  if (cfg.identity.empty()) throw ConfigError("missing identity in [sweep]");
  if (cfg.order < 1) throw ConfigError("order must be >= 1");
  return cfg;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    SweepConfig cfg = parse_sweep_config(text.str());
    if (cfg.name.empty()) cfg.name = path.stem().string();
    return cfg;
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace hypercheck
