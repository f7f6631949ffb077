#include "hopfgalois/rational.hpp"

namespace hopfgalois {

Rat rat_from_string(const std::string& s) {
  if (s.empty())
    fail("rat_from_string: empty string");
  auto slash = s.find('/');
  Int num, den;
  try {
    if (slash == std::string::npos) {
      num = Int(s);
      den = 1;
    } else {
      num = Int(s.substr(0, slash));
      den = Int(s.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    fail("rat_from_string: cannot parse '" + s + "'");
  }
  return make_rat(num, den);
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace hopfgalois
