#include "sigalg/path.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sigalg/errors.hpp"

namespace sigalg {

template <RealScalar S>
Path<S>::Path(std::vector<std::vector<S>> points) : dimension_(0) {
    if (points.empty()) throw InvalidArgument("path needs at least one vertex");
    dimension_ = points.front().size();
    if (dimension_ == 0) throw InvalidArgument("path dimension must be positive");
    coords_.reserve(points.size() * dimension_);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != dimension_)
            throw ShapeMismatch("vertex " + std::to_string(i) + " has dimension " +
                                std::to_string(points[i].size()) + ", expected " + std::to_string(dimension_));
        for (auto& c : points[i]) coords_.push_back(std::move(c));
    }
}

template <RealScalar S>
Path<S>::Path(std::size_t dimension, std::vector<S> coordinates)
    : dimension_(dimension), coords_(std::move(coordinates)) {
    if (dimension_ == 0) throw InvalidArgument("path dimension must be positive");
    if (coords_.empty()) throw InvalidArgument("path needs at least one vertex");
    if (coords_.size() % dimension_ != 0) throw ShapeMismatch("coordinate count is not a multiple of the dimension");
}

template <RealScalar S>
std::span<const S> Path<S>::vertex(std::size_t i) const {
    if (i >= vertex_count()) throw InvalidArgument("vertex index out of range");
    return std::span<const S>(coords_).subspan(i * dimension_, dimension_);
}

template <RealScalar S>
std::vector<S> Path<S>::increment(std::size_t segment) const {
    if (segment >= segment_count()) throw InvalidArgument("segment index out of range");
    auto a = vertex(segment);
    auto b = vertex(segment + 1);
    std::vector<S> out(dimension_);
    for (std::size_t i = 0; i < dimension_; ++i) out[i] = b[i] - a[i];
    return out;
}

template <RealScalar S>
Path<S> concatenate(const Path<S>& p, const Path<S>& q) {
    if (p.dimension() != q.dimension()) throw ShapeMismatch("cannot concatenate paths of different dimension");
    const std::size_t d = p.dimension();
    std::vector<S> coords(p.coordinates().begin(), p.coordinates().end());
    auto end = p.vertex(p.vertex_count() - 1);
    auto start = q.vertex(0);
    for (std::size_t v = 1; v < q.vertex_count(); ++v) {
        auto x = q.vertex(v);
        for (std::size_t i = 0; i < d; ++i) coords.push_back(end[i] + (x[i] - start[i]));
    }
    return Path<S>(d, std::move(coords));
}

template <RealScalar S>
Path<S> insert_midpoint(const Path<S>& p, std::size_t segment) {
    if (segment >= p.segment_count()) throw InvalidArgument("segment index out of range");
    const std::size_t d = p.dimension();
    std::vector<S> coords;
    coords.reserve(p.coordinates().size() + d);
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        auto x = p.vertex(v);
        coords.insert(coords.end(), x.begin(), x.end());
        if (v == segment) {
            auto y = p.vertex(v + 1);
            for (std::size_t i = 0; i < d; ++i) coords.push_back(S((x[i] + y[i]) / 2));
        }
    }
    return Path<S>(d, std::move(coords));
}

Path<double> to_f64(const Path<Rational>& p) {
    std::vector<double> coords;
    coords.reserve(p.coordinates().size());
    for (const auto& c : p.coordinates()) coords.push_back(to_double(c));
    return Path<double>(p.dimension(), std::move(coords));
}

Rational path_length_l1_exact(const Path<Rational>& path) {
    Rational total;
    for (std::size_t s = 0; s < path.segment_count(); ++s)
        for (const auto& c : path.increment(s)) total += abs(c);
    return total;
}

template <RealScalar S>
double path_length(const Path<S>& path, NormKind kind) {
    if constexpr (std::is_same_v<S, Rational>) {
        if (kind == NormKind::L1Projective) return to_double(path_length_l1_exact(path));
        double total = 0.0;
        for (std::size_t s = 0; s < path.segment_count(); ++s) {
            Rational sq;
            for (const auto& c : path.increment(s)) sq += c * c;
            total += std::sqrt(to_double(sq));
        }
        return total;
    } else {
        double total = 0.0;
        for (std::size_t s = 0; s < path.segment_count(); ++s) {
            auto inc = path.increment(s);
            if (kind == NormKind::L1Projective) {
                for (double c : inc) total += std::abs(c);
            } else {
                double sq = 0.0;
                for (double c : inc) sq += c * c;
                total += std::sqrt(sq);
            }
        }
        return total;
    }
}

namespace {

enum class Alignment { Independent, Same, Opposite };

constexpr double kRelativeTolerance = 1e-12;

double sup_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double c : v) m = std::max(m, std::abs(c));
    return m;
}

bool is_null(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool vanishes(const std::vector<double>& v, double scale) {
    return sup_norm(v) <= kRelativeTolerance * scale;
}

template <class S>
S dot(const std::vector<S>& a, const std::vector<S>& b) {
    S sum{};
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

Alignment align(const std::vector<Rational>& t, const std::vector<Rational>& u) {
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (t[i] * u[j] != t[j] * u[i]) return Alignment::Independent;
    return sgn(dot(t, u)) > 0 ? Alignment::Same : Alignment::Opposite;
}

Alignment align(const std::vector<double>& t, const std::vector<double>& u) {
    const double bound = kRelativeTolerance * sup_norm(t) * sup_norm(u);
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (std::abs(t[i] * u[j] - t[j] * u[i]) > bound) return Alignment::Independent;
    return dot(t, u) > 0 ? Alignment::Same : Alignment::Opposite;
}

template <class S>
std::vector<S> sum(const std::vector<S>& a, const std::vector<S>& b) {
    std::vector<S> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace

template <RealScalar S>
Path<S> tree_reduce(const Path<S>& path) {
    const std::size_t d = path.dimension();
    // Stack invariant: nonzero entries, no two neighbours parallel.
    std::vector<std::vector<S>> stack;
    for (std::size_t s = 0; s < path.segment_count(); ++s) {
        std::vector<S> u = path.increment(s);
        if constexpr (std::is_same_v<S, Rational>) {
            if (is_null(u)) continue;
        } else {
            if (sup_norm(u) == 0.0) continue;
        }
        while (true) {
            if (stack.empty()) {
                stack.push_back(std::move(u));
                break;
            }
            auto& top = stack.back();
            const Alignment a = align(top, u);
            if (a == Alignment::Independent) {
                stack.push_back(std::move(u));
                break;
            }
            auto merged = sum(top, u);
            if (a == Alignment::Same) {
                top = std::move(merged);
                break;
            }
            bool gone;
            if constexpr (std::is_same_v<S, Rational>) gone = is_null(merged);
            else gone = vanishes(merged, std::max(sup_norm(top), sup_norm(u)));
            if (gone) {
                stack.pop_back();
                break;
            }
            if (dot(merged, top) > 0) {
                top = std::move(merged);
                break;
            }
            // u overshoots the top segment; keep cancelling with what lies below.
            stack.pop_back();
            u = std::move(merged);
        }
    }
    auto start = path.vertex(0);
    std::vector<S> coords(start.begin(), start.end());
    std::vector<S> cursor(start.begin(), start.end());
    for (const auto& inc : stack) {
        for (std::size_t i = 0; i < d; ++i) cursor[i] += inc[i];
        coords.insert(coords.end(), cursor.begin(), cursor.end());
    }
    return Path<S>(d, std::move(coords));
}

template class Path<Rational>;
template class Path<double>;
template Path<Rational> concatenate(const Path<Rational>&, const Path<Rational>&);
template Path<double> concatenate(const Path<double>&, const Path<double>&);
template Path<Rational> insert_midpoint(const Path<Rational>&, std::size_t);
template Path<double> insert_midpoint(const Path<double>&, std::size_t);
template double path_length(const Path<Rational>&, NormKind);
template double path_length(const Path<double>&, NormKind);
template Path<Rational> tree_reduce(const Path<Rational>&);
template Path<double> tree_reduce(const Path<double>&);

}  // namespace sigalg
