#include <cmath>
#include <regex>

#include "pentamod/cli/commands.hpp"

namespace pentamod::cli {

namespace {

const std::string kNumber = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

double imag_part(const std::string& sign, const std::string& magnitude) {
  const double m = magnitude.empty() ? 1.0 : std::stod(magnitude);
  return sign == "-" ? -m : m;
}

}  // namespace

std::optional<Complex> parse_complex(const std::string& text) {
  const std::string s = strip_spaces(text);
  static const std::regex polar("^(" + kNumber + ")@([+-]?" + kNumber + ")(?:deg)?$");
  static const std::regex real_only("^([+-]?" + kNumber + ")$");
  static const std::regex imag_only("^([+-]?)(" + kNumber + ")?i$");
  static const std::regex both("^([+-]?" + kNumber + ")([+-])(" + kNumber + ")?i$");

  std::smatch m;
  if (std::regex_match(s, m, polar)) {
    const double deg = std::stod(m[2].str());
    return std::polar(std::stod(m[1].str()), deg * kPi / 180.0);
  }
  if (std::regex_match(s, m, real_only)) return Complex{std::stod(m[1].str()), 0.0};
  if (std::regex_match(s, m, imag_only)) return Complex{0.0, imag_part(m[1].str(), m[2].str())};
  if (std::regex_match(s, m, both)) {
    return Complex{std::stod(m[1].str()), imag_part(m[2].str(), m[3].str())};
  }
  return std::nullopt;
}

std::optional<ChartId> parse_chart(const std::string& text) {
  if (text == "A" || text == "a") return ChartId::A;
  if (text == "B" || text == "b") return ChartId::B;
  if (text == "M" || text == "m") return ChartId::M;
  return std::nullopt;
}

}  // namespace pentamod::cli
