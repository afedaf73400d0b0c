#include "ramsey/real_intervals.hpp"

#include <map>
#include <stdexcept>

namespace ramsey {

namespace {

struct Ival {
    BigRat lo, hi;
    bool lc, hc;
};

bool nonempty(const Ival& v) { return v.lo < v.hi || (v.lo == v.hi && v.lc && v.hc); }

Ival add(const Ival& a, const Ival& b) {
    return {a.lo + b.lo, a.hi + b.hi, a.lc && b.lc, a.hc && b.hc};
}

Ival scale(const Ival& a, const BigRat& s) {  // s > 0
    return {a.lo * s, a.hi * s, a.lc, a.hc};
}

Ival point_minus(const BigRat& p, const Ival& a) { return {p - a.hi, p - a.lo, a.hc, a.lc}; }

Ival intersect(const Ival& a, const Ival& b) {
    Ival r = a;
    if (b.lo > r.lo) {
        r.lo = b.lo;
        r.lc = b.lc;
    } else if (b.lo == r.lo) {
        r.lc = r.lc && b.lc;
    }
    if (b.hi < r.hi) {
        r.hi = b.hi;
        r.hc = b.hc;
    } else if (b.hi == r.hi) {
        r.hc = r.hc && b.hc;
    }
    return r;
}

BigRat pick(const Ival& v) { return v.lo == v.hi ? v.lo : (v.lo + v.hi) / 2; }

Ival from_piece(const RationalPiece& p) { return {p.lo, p.hi, p.lo_closed, p.hi_closed}; }

}  // namespace

void validate_interval_colouring(const RationalIntervalColouring& col) {
    if (col.r < 1) throw std::invalid_argument("interval colouring: r must be >= 1");
    if (col.pieces.empty()) throw std::invalid_argument("interval colouring: no pieces");
    for (std::size_t i = 0; i < col.pieces.size(); ++i) {
        const RationalPiece& p = col.pieces[i];
        if (p.colour < 1 || p.colour > col.r)
            throw std::invalid_argument("interval colouring: piece " + std::to_string(i) +
                                        " colour out of range");
        if (!nonempty(from_piece(p)))
            throw std::invalid_argument("interval colouring: piece " + std::to_string(i) + " is empty");
        if (i > 0) {
            const RationalPiece& q = col.pieces[i - 1];
            if (q.hi != p.lo)
                throw std::invalid_argument("interval colouring: gap or overlap between pieces " +
                                            std::to_string(i - 1) + " and " + std::to_string(i));
            if (q.hi_closed == p.lo_closed)
                throw std::invalid_argument(
                    "interval colouring: boundary between pieces " + std::to_string(i - 1) + " and " +
                    std::to_string(i) + " must be closed on exactly one side");
        }
    }
}

bool piece_contains(const RationalPiece& p, const BigRat& x) {
    if (x < p.lo || (x == p.lo && !p.lo_closed)) return false;
    if (x > p.hi || (x == p.hi && !p.hi_closed)) return false;
    return true;
}

int interval_colour_at(const RationalIntervalColouring& col, const BigRat& x) {
    for (const RationalPiece& p : col.pieces)
        if (piece_contains(p, x)) return p.colour;
    return 0;
}

std::optional<RealWitness> find_additive_witness(const RationalIntervalColouring& col,
                                                 const EquationSpec& eq) {
    validate_interval_colouring(col);
    std::size_t k = eq.exponents().size();
    std::vector<BigRat> w;  // additive weights a_i as rationals
    for (int e : eq.exponents()) w.emplace_back(e);

    std::map<int, std::vector<std::size_t>> by_colour;
    for (std::size_t i = 0; i < col.pieces.size(); ++i)
        by_colour[col.pieces[i].colour].push_back(i);

    for (const auto& [colour, idxs] : by_colour) {
        std::vector<std::size_t> pos(k + 1, 0);  // odometer over piece choices
        while (true) {
            // suffix[i] = sum_{j >= i} a_j * I_{pos[j]}, suffix[k] = {0}
            std::vector<Ival> suffix(k + 1, Ival{BigRat(0), BigRat(0), true, true});
            for (std::size_t i = k; i-- > 0;)
                suffix[i] = add(scale(from_piece(col.pieces[idxs[pos[i]]]), w[i]), suffix[i + 1]);
            Ival hit = intersect(suffix[0], from_piece(col.pieces[idxs[pos[k]]]));
            if (nonempty(hit)) {
                RealWitness wit;
                wit.colour = colour;
                wit.y = pick(hit);
                BigRat rem = wit.y;
                for (std::size_t i = 0; i + 1 < k; ++i) {
                    Ival feas = intersect(from_piece(col.pieces[idxs[pos[i]]]),
                                          scale(point_minus(rem, suffix[i + 1]), BigRat(1) / w[i]));
                    if (!nonempty(feas))
                        throw std::logic_error("interval witness: backward interval went empty");
                    wit.xs.push_back(pick(feas));
                    rem -= w[i] * wit.xs.back();
                }
                wit.xs.push_back(rem / w[k - 1]);
                if (!piece_contains(col.pieces[idxs[pos[k - 1]]], wit.xs.back()))
                    throw std::logic_error("interval witness: last variable left its piece");
                return wit;
            }
            // advance odometer
            std::size_t d = k + 1;
            while (d-- > 0) {
                if (++pos[d] < idxs.size()) break;
                pos[d] = 0;
                if (d == 0) goto next_colour;
            }
        }
    next_colour:;
    }
    return std::nullopt;
}

bool check_sumfree(const RationalIntervalColouring& col, const EquationSpec& eq) {
    return !find_additive_witness(col, eq).has_value();
}

RationalIntervalColouring floor_extend(const DiscreteColouring& xi) {
    RationalIntervalColouring out;
    out.r = xi.r();
    for (std::int64_t x = xi.lo(); x <= xi.hi(); ++x)
        out.pieces.push_back({BigRat(x), BigRat(x + 1), true, false, xi.at(x)});
    return out;
}

RationalIntervalColouring ceil_extend(const DiscreteColouring& xi) {
    RationalIntervalColouring out;
    out.r = xi.r();
    for (std::int64_t x = xi.lo(); x <= xi.hi(); ++x)
        out.pieces.push_back({BigRat(x), BigRat(x + 1), false, true, xi.at(x)});
    return out;
}

IntervalCertificate certify_interval_lower_bound(const RationalIntervalColouring& col,
                                                 const EquationSpec& eq) {
    validate_interval_colouring(col);
    if (col.pieces.front().lo != 1)
        throw std::invalid_argument("certify: colouring domain must start at 1");
    std::optional<RealWitness> wit = find_additive_witness(col, eq);
    return IntervalCertificate{col.pieces.back().hi, col.r, eq, col, !wit.has_value(), wit};
}

std::string rational_to_string(const BigRat& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigRat rational_from_string(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return BigRat(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return BigRat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational '" + text + "'");
    }
}

namespace {
BigRat rational_from_json(const nlohmann::json& v) {
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    if (v.is_number_integer()) return BigRat(v.get<long long>());
    throw std::invalid_argument("rational endpoints must be strings like \"3/2\" or integers");
}
}  // namespace

nlohmann::json interval_colouring_to_json(const RationalIntervalColouring& col) {
    nlohmann::json arr = nlohmann::json::array();
    for (const RationalPiece& p : col.pieces) {
        arr.push_back({{"lo", rational_to_string(p.lo)},
                       {"hi", rational_to_string(p.hi)},
                       {"lo_closed", p.lo_closed},
                       {"hi_closed", p.hi_closed},
                       {"colour", p.colour}});
    }
    return arr;
}

RationalIntervalColouring interval_colouring_from_json(const nlohmann::json& j) {
    const nlohmann::json* arr = &j;
    if (j.is_object() && j.contains("pieces")) arr = &j.at("pieces");
    if (!arr->is_array()) throw std::invalid_argument("interval colouring JSON must be a list of pieces");
    RationalIntervalColouring col;
    col.r = 1;
    for (const nlohmann::json& e : *arr) {
        RationalPiece p;
        p.lo = rational_from_json(e.at("lo"));
        p.hi = rational_from_json(e.at("hi"));
        p.colour = e.at("colour").get<int>();
        p.lo_closed = e.value("lo_closed", false);  // default (lo, hi] convention
        p.hi_closed = e.value("hi_closed", true);
        col.pieces.push_back(p);
        col.r = std::max(col.r, p.colour);
    }
    if (j.is_object() && j.contains("r")) col.r = j.at("r").get<int>();
    validate_interval_colouring(col);
    return col;
}

nlohmann::json certificate_to_json(const IntervalCertificate& cert) {
    nlohmann::json j{{"T", rational_to_string(cert.T)},
                     {"r", cert.r},
                     {"eq", cert.eq.to_string()},
                     {"verified", cert.verified},
                     {"pieces", interval_colouring_to_json(cert.colouring)}};
    if (cert.witness) {
        nlohmann::json xs = nlohmann::json::array();
        for (const BigRat& x : cert.witness->xs) xs.push_back(rational_to_string(x));
        j["witness"] = {{"xs", xs},
                        {"y", rational_to_string(cert.witness->y)},
                        {"colour", cert.witness->colour}};
    }
    return j;
}

IntervalCertificate reverify_certificate(const nlohmann::json& j) {
    EquationSpec eq = EquationSpec::parse(j.at("eq").get<std::string>());
    RationalIntervalColouring col = interval_colouring_from_json(j.at("pieces"));
    if (j.contains("r")) col.r = std::max(col.r, j.at("r").get<int>());
    return certify_interval_lower_bound(col, eq);
}

}
