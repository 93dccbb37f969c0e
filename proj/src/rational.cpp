#include "rainbow/rational.hpp"

namespace rainbow {

std::string to_fraction_string(const Scalar& s) {
  Int n = num(s), d = den(s);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

std::optional<Scalar> parse_fraction(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!is_int(text)) return std::nullopt;
      return Scalar(Int(text));
    }
    const std::string p = text.substr(0, slash);
    const std::string q = text.substr(slash + 1);
    if (!is_int(p) || !is_int(q)) return std::nullopt;
    Int qi(q);
    if (qi == 0) return std::nullopt;
    return Scalar(Int(p), qi);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace rainbow
