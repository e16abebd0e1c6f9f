#include "hkmom/laurent.hpp"

namespace hkmom {

std::string LaurentPoly::to_string(const std::string& symbol) const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, v] = *it;
        if (!s.empty()) s += v > 0 ? " + " : " - ";
        else if (v < 0) s += "-";
        Rational a = v > 0 ? v : Rational(-v);
        bool unit = a == 1 && e != 0;
        if (!unit) s += a.get_str();
        if (e != 0) {
            if (!unit) s += "*";
            s += symbol;
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

}  // namespace hkmom
