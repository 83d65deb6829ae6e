#ifndef LCTLAB_EXPLORER_HPP
#define LCTLAB_EXPLORER_HPP

#include <optional>
#include <string>
#include <vector>

#include "lctlab/limitlab.hpp"

namespace lctlab {

// Desk-scale guards; exceeding one is a budget error, not a wrong answer.
struct ExploreGuards {
    int max_n = 3;
    int max_degree = 6;
    long max_ideals = 5000000;
};

// Every monomial ideal inside the maximal ideal whose minimal generators
// have degree <= d, each exactly once via its minimal generating set: the
// nonempty antichains of the divisibility order on monomials of degree 1..d.
// Generators are listed in (degree, grevlex) order, which is the canonical
// ideal id; the enumeration order is deterministic.
std::vector<Ideal> enumerate_monomial_ideals(int n, int d, const ExploreGuards& guards = {});

struct Spectrum {
    int n = 0;
    int d = 0;
    long count = 0;                   // ideals enumerated
    std::vector<ExtRational> values;  // sorted, strictly increasing
};

// Oracle lct of every enumerated ideal, deduplicated and sorted. jobs > 1
// runs the oracle sweep in an OpenMP pool; the merge is by enumeration
// index, so output is identical for any job count.
Spectrum lct_spectrum(int n, int d, const ExploreGuards& guards = {}, int jobs = 1);

struct SequencePoint {
    std::string tag;
    ExtRational value;  // certified value when certified, else best estimate
    bool certified = false;
    std::optional<ExtRational> predicted;  // theorem prediction for this point
    std::optional<LctBracket> bracket;     // when only a bracket is known

    SequencePoint() = default;
    SequencePoint(std::string tag, ExtRational value, bool certified)
        : tag(std::move(tag)), value(std::move(value)), certified(certified) {}
};

// A constructed family of thresholds with its predicted limit.
struct ValueSequence {
    std::string construction;
    std::vector<SequencePoint> points;
    ExtRational limit;
    std::optional<Ideal> witness;  // ideal whose lct is the limit, when known
};

enum class Direction { from_above, from_below };

struct AccumulationReport {
    ExtRational target;
    Direction direction = Direction::from_above;
    std::vector<SequencePoint> witnesses;
    std::string verdict;
    bool verified = false;
};

// For each certified monotone sequence, locate its limit in one of the
// supplied spectra (or certify it by an oracle witness, or the lct(0)=0
// convention). Uncertified points are refused.
std::vector<AccumulationReport> accumulation_scan(const std::vector<ValueSequence>& sequences,
                                                  const std::vector<Spectrum>& spectra);

// The t-power families lct(a + (t^m)) = lct(a) + 1/m over every monomial
// ideal of the (n, d) slice, each point certified by the oracle.
std::vector<ValueSequence> t_power_families(int n, int d, int m_max,
                                            const ExploreGuards& guards = {});

// Desk-scale accumulation picture of a spectrum: gap windows between
// consecutive values are empty, and the decreasing run of values points at
// the infimum 0 = lct(0).
AccumulationReport spectrum_tail_report(const Spectrum& s);

}  // namespace lctlab

#endif
