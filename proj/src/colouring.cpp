#include "ramsey/colouring.hpp"

#include <sstream>

namespace ramsey {

DiscreteColouring::DiscreteColouring(std::int64_t lo, std::int64_t hi, int r, int fill)
    : lo_(lo), hi_(hi), r_(r) {
    if (lo < 1) throw std::invalid_argument("colouring: lo must be >= 1");
    if (hi < lo) throw std::invalid_argument("colouring: hi must be >= lo");
    if (r < 1 || r > 9) throw std::invalid_argument("colouring: r must be in 1..9");
    if (fill < 1 || fill > r) throw std::invalid_argument("colouring: fill colour out of range");
    cells_.assign(static_cast<std::size_t>(hi - lo + 1), static_cast<std::uint8_t>(fill));
}

void DiscreteColouring::set(std::int64_t x, int colour) {
    if (x < lo_ || x > hi_) throw std::out_of_range("colouring: element out of domain");
    if (colour < 1 || colour > r_) throw std::invalid_argument("colouring: colour out of range");
    cells_[static_cast<std::size_t>(x - lo_)] = static_cast<std::uint8_t>(colour);
}

DiscreteColouring canonicalize(const DiscreteColouring& c) {
    std::vector<int> rename(static_cast<std::size_t>(c.r()) + 1, 0);
    int next = 0;
    DiscreteColouring out(c.lo(), c.hi(), c.r());
    for (std::int64_t x = c.lo(); x <= c.hi(); ++x) {
        int col = c.at(x);
        if (rename[col] == 0) rename[col] = ++next;
        out.set(x, rename[col]);
    }
    return out;
}

int colour_from_letter(char ch) {
    if (ch >= '1' && ch <= '9') return ch - '0';
    switch (ch) {
        case 'R': return 1;
        case 'B': return 2;
        case 'G': return 3;
        case 'P': return 4;
        case 'A': return 5;
        case 'C': return 6;
        case 'D': return 7;
        case 'E': return 8;
        case 'F': return 9;
        default: return -1;
    }
}

DiscreteColouring parse_colouring(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw ColouringParseError(1, 1, "missing header line");
    std::istringstream hs(header);
    std::int64_t lo, hi;
    int r;
    if (!(hs >> lo >> hi >> r)) throw ColouringParseError(1, 1, "header must be 'lo hi r'");
    std::string rest;
    if (hs >> rest) throw ColouringParseError(1, static_cast<int>(header.size()), "trailing junk in header");
    if (lo < 1) throw ColouringParseError(1, 1, "lo must be >= 1");
    if (hi < lo) throw ColouringParseError(1, 1, "hi must be >= lo");
    if (r < 1 || r > 9) throw ColouringParseError(1, 1, "r must be in 1..9");

    std::string body;
    if (!std::getline(in, body)) throw ColouringParseError(2, 1, "missing colour line");
    if (!body.empty() && body.back() == '\r') body.pop_back();
    std::int64_t want = hi - lo + 1;
    if (static_cast<std::int64_t>(body.size()) != want)
        throw ColouringParseError(2, static_cast<int>(body.size()) + 1,
                                  "expected " + std::to_string(want) + " colour characters, got " +
                                      std::to_string(body.size()));
    DiscreteColouring c(lo, hi, r);
    for (std::size_t i = 0; i < body.size(); ++i) {
        int col = colour_from_letter(body[i]);
        if (col < 0)
            throw ColouringParseError(2, static_cast<int>(i) + 1,
                                      std::string("unrecognized colour character '") + body[i] + "'");
        if (col > r)
            throw ColouringParseError(2, static_cast<int>(i) + 1,
                                      "colour " + std::to_string(col) + " out of range 1.." + std::to_string(r));
        c.set(lo + static_cast<std::int64_t>(i), col);
    }
    return c;
}

std::string serialize_colouring(const DiscreteColouring& c) {
    std::string out = std::to_string(c.lo()) + " " + std::to_string(c.hi()) + " " + std::to_string(c.r()) + "\n";
    for (std::int64_t x = c.lo(); x <= c.hi(); ++x)
        out += static_cast<char>('0' + c.at(x));
    out += '\n';
    return out;
}

}
