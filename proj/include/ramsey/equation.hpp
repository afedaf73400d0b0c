#pragma once

#include <string>
#include <vector>

namespace ramsey {

// exponent vector a = (a1 <= ... <= ak) for the equation x1^a1 * ... * xk^ak = y,
// and its additive shadow a1*x1 + ... + ak*xk = y
class EquationSpec {
public:
    explicit EquationSpec(std::vector<int> exponents);
    static EquationSpec parse(const std::string& text);  // "1,2" etc

    const std::vector<int>& exponents() const { return a_; }
    int k() const { return static_cast<int>(a_.size()); }
    int ones() const { return m_; }          // m = #{i : a_i = 1}
    int exponent_sum() const { return big_a_; }  // A = sum a_i
    bool partition_regular() const { return m_ >= 1; }
    std::string to_string() const;

    bool operator==(const EquationSpec& o) const { return a_ == o.a_; }

private:
    std::vector<int> a_;
    int m_ = 0;
    int big_a_ = 0;
};

}
