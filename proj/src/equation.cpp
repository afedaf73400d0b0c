#include "ramsey/equation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ramsey {

EquationSpec::EquationSpec(std::vector<int> exponents) : a_(std::move(exponents)) {
    if (a_.size() < 2) throw std::invalid_argument("equation needs k >= 2 exponents");
    for (int e : a_)
        if (e < 1) throw std::invalid_argument("exponents must be >= 1");
    std::sort(a_.begin(), a_.end());  // canonical non-decreasing order
    for (int e : a_) {
        if (e == 1) ++m_;
        big_a_ += e;
    }
}

EquationSpec EquationSpec::parse(const std::string& text) {
    std::vector<int> a;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad exponent '" + tok + "' in equation '" + text + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument("bad exponent '" + tok + "' in equation '" + text + "'");
        a.push_back(v);
    }
    return EquationSpec(a);
}

std::string EquationSpec::to_string() const {
    std::string out;
    for (size_t i = 0; i < a_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(a_[i]);
    }
    return out;
}

}
