#include <qortho/analysis.hpp>

#include <qortho/errors.hpp>
#include <qortho/parallel.hpp>
#include <qortho/rodrigues.hpp>

#include <functional>

namespace qortho {

std::vector<Poly> sturm_sequence(const Poly& p) {
    if (p.is_zero()) throw ParameterError("Sturm sequence of the zero polynomial");
    std::vector<Poly> seq{p};
    Poly prev = p;
    Poly cur = p.derivative();
    while (!cur.is_zero()) {
        seq.push_back(cur);
        Poly rem = divmod(prev, cur).second;
        prev = std::move(cur);
        cur = -rem;
    }
    return seq;
}

namespace {

long variations(const std::vector<Poly>& seq, const Scalar& x) {
    long count = 0;
    int last = 0;
    for (const auto& f : seq) {
        const int sg = sign(f(x));
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++count;
        last = sg;
    }
    return count;
}

long count_in(const std::vector<Poly>& seq, const Scalar& lo, const Scalar& hi) {
    return variations(seq, lo) - variations(seq, hi);
}

} // namespace

long sturm_count(const Poly& p, const Scalar& lo, const Scalar& hi) {
    if (p.is_zero()) throw ParameterError("root count of the zero polynomial");
    if (lo >= hi) throw ParameterError("root count needs lo < hi");
    if (p(lo) == 0) throw ParameterError("left endpoint " + to_string(lo) + " is a root");
    return count_in(sturm_sequence(square_free_part(p)), lo, hi);
}

Scalar cauchy_bound(const Poly& p) {
    if (p.is_zero()) throw ParameterError("Cauchy bound of the zero polynomial");
    Scalar m = 0;
    for (int k = 0; k < p.degree(); ++k) {
        Scalar a = abs(p.coeff(k) / p.leading());
        if (a > m) m = a;
    }
    return 1 + m;
}

Poly square_free_part(const Poly& p) {
    if (p.is_zero()) throw ParameterError("square-free part of the zero polynomial");
    return divmod(p, gcd(p, p.derivative())).first.monic();
}

bool has_simple_roots(const Poly& p) {
    if (p.is_zero()) throw ParameterError("root structure of the zero polynomial");
    return gcd(p, p.derivative()).degree() <= 0;
}

RootReport isolate_roots(const Poly& p, int precision) {
    if (p.is_zero()) throw ParameterError("roots of the zero polynomial");
    if (precision < 1) throw ParameterError("precision must be at least 1");
    RootReport report;
    report.simple = has_simple_roots(p);
    const Poly sf = square_free_part(p);
    if (sf.degree() < 1) return report;
    const auto seq = sturm_sequence(sf);
    const Scalar width = pow(Scalar(10), -precision);

    auto record_point = [&](const Scalar& x) { report.intervals.emplace_back(x, x); };
    // Moves from `root` toward `toward` until the gap holds no other root.
    auto clear_of = [&](const Scalar& root, const Scalar& toward) {
        Scalar step = (toward - root) / 2;
        for (;;) {
            const Scalar cand = root + step;
            if (sf(cand) != 0) {
                const bool left = cand < root;
                const long inside = left ? count_in(seq, cand, root) - 1 : count_in(seq, root, cand);
                if (inside == 0) return cand;
            }
            step /= 2;
        }
    };

    // Roots in (lo, hi] with sf(lo) != 0; `c` is their number.
    std::function<void(const Scalar&, const Scalar&, long)> split = [&](const Scalar& lo, const Scalar& hi,
                                                                      long c) {
        if (c == 0) return;
        if (c == 1) {
            if (sf(hi) == 0) {
                record_point(hi);
                return;
            }
            if (sf.degree() == 1) {
                record_point(-sf.coeff(0) / sf.coeff(1));
                return;
            }
            if (hi - lo < width) {
                report.intervals.emplace_back(lo, hi);
                return;
            }
        }
        const Scalar mid = (lo + hi) / 2;
        if (sf(mid) != 0) {
            const long left = count_in(seq, lo, mid);
            split(lo, mid, left);
            split(mid, hi, c - left);
            return;
        }
        const Scalar below = clear_of(mid, lo);
        const Scalar above = clear_of(mid, hi);
        split(lo, below, count_in(seq, lo, below));
        record_point(mid);
        split(above, hi, count_in(seq, above, hi));
    };

    const Scalar bound = cauchy_bound(sf);
    split(-bound, bound, count_in(seq, -bound, bound));
    for (const auto& [lo, hi] : report.intervals) {
        report.decimals.push_back(to_decimal((lo + hi) / 2, precision));
        if (lo >= 0 && hi > 0) ++report.count_positive;
    }
    return report;
}

LimitScan limit_scan(const ClassicalParams& cparams, const MultiIndex& n, const Scalar& delta, long steps,
                     LimitSource source) {
    if (delta <= 0) throw ParameterError("delta must be positive, got " + to_string(delta));
    if (steps < 1) throw ParameterError("steps must be at least 1");
    require_valid(cparams);
    const Poly Kc = source == LimitSource::solver ? solve_type2_classical(cparams, n)
                                                  : rodrigues_classical(cparams, n).poly;
    std::vector<Scalar> classical_values;
    for (long s = 0; s <= cparams.N; ++s) classical_values.push_back(Kc(Scalar(s)));

    LimitScan scan;
    for (long k = 0; k < steps; ++k) scan.v_sequence.push_back(1 + delta * pow(Scalar(2), -k));
    scan.deviations.resize(scan.v_sequence.size());
    parallel_for(scan.v_sequence.size(), [&](std::size_t k) {
        const KravchukParams params{QContext(scan.v_sequence[k]), cparams.p, complement(cparams.p), cparams.N};
        Poly Kq;
        try {
            switch (source) {
            case LimitSource::solver: Kq = solve_type2_q(params, n); break;
            case LimitSource::rodrigues_printed: Kq = rodrigues_q(params, n, RodriguesForm::printed).poly; break;
            case LimitSource::rodrigues_shifted:
                Kq = rodrigues_q(params, n, RodriguesForm::lattice_shifted).poly;
                break;
            }
        } catch (const ParameterError& e) {
            throw ParameterError("limit scan at v = " + to_string(scan.v_sequence[k]) + ": " + e.what());
        } catch (const Error& e) {
            throw Error("limit scan at v = " + to_string(scan.v_sequence[k]) + ": " + e.what());
        }
        Scalar dev = 0;
        for (long s = 0; s <= cparams.N; ++s) {
            Scalar diff = abs(Kq(lattice_x(params.ctx, s)) - classical_values[static_cast<std::size_t>(s)]);
            if (diff > dev) dev = diff;
        }
        scan.deviations[k] = dev;
    });
    for (std::size_t k = 1; k < scan.deviations.size(); ++k) {
        if (scan.deviations[k] == 0) {
            scan.ratios.emplace_back(std::nullopt);
        } else {
            scan.ratios.emplace_back(scan.deviations[k - 1] / scan.deviations[k]);
        }
    }
    return scan;
}

} // namespace qortho
