#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

// total colouring of an integer interval [lo, hi] with colours 1..r
class DiscreteColouring {
public:
    DiscreteColouring(std::int64_t lo, std::int64_t hi, int r, int fill = 1);

    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return hi_; }
    int r() const { return r_; }
    std::int64_t size() const { return hi_ - lo_ + 1; }

    int at(std::int64_t x) const {
        if (x < lo_ || x > hi_) throw std::out_of_range("colouring: element out of domain");
        return cells_[static_cast<std::size_t>(x - lo_)];
    }
    void set(std::int64_t x, int colour);

    bool operator==(const DiscreteColouring& o) const {
        return lo_ == o.lo_ && hi_ == o.hi_ && r_ == o.r_ && cells_ == o.cells_;
    }

private:
    std::int64_t lo_, hi_;
    int r_;
    std::vector<std::uint8_t> cells_;
};

struct ColouringParseError : std::runtime_error {
    int line, column;
    ColouringParseError(int line_, int column_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + what_),
          line(line_), column(column_) {}
};

// colours renamed by first occurrence: first distinct colour seen becomes 1, next 2, ...
DiscreteColouring canonicalize(const DiscreteColouring& c);

// text format: first line "lo hi r", second line one character per element,
// digits 1-9 or letters (R=1, B=2, G=3, P=4, then A=5, C=6, D=7, E=8, F=9)
DiscreteColouring parse_colouring(const std::string& text);
std::string serialize_colouring(const DiscreteColouring& c);  // always digit form

int colour_from_letter(char ch);  // -1 if not a recognized colour character

}
