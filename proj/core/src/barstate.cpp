#include "domcensus/barstate.hpp"

#include <cstdlib>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace domcensus {

namespace {

constexpr int kDefaultLimitRadix2 = 12;
constexpr int kDefaultLimitRadix3 = 8;

struct Limits {
    int radix2;
    int radix3;
};

Limits initial_limits() {
    Limits limits{kDefaultLimitRadix2, kDefaultLimitRadix3};
    if (const char* env = std::getenv("DOMCENSUS_MAX_Q")) {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end && *end == '\0' && value >= 0 && value <= 64) {
            limits.radix2 = static_cast<int>(value);
            limits.radix3 = static_cast<int>(value);
        }
    }
    return limits;
}

Limits& limits() {
    static Limits l = initial_limits();
    return l;
}

std::mutex& limits_mutex() {
    static std::mutex m;
    return m;
}

void check_length(int length, int radix) {
    if (length < 0) throw DimensionError("negative bar length");
    int cap = max_bar_length(radix);
    if (length > cap)
        throw LimitError("bar length " + std::to_string(length) + " exceeds the cap " +
                         std::to_string(cap) + " for radix " + std::to_string(radix) +
                         " (raise DOMCENSUS_MAX_Q to override)");
}

PolyMatrix unit1x1() {
    PolyMatrix m(1, 1);
    m.set(1, 1, BivariatePoly::one());
    return m;
}

PolyMatrix zero_like(const PolyMatrix& m) {
    return PolyMatrix(m.rows(), m.cols());
}

// Extending every bar of length q by one tile on the left.  The new tile is
// empty, the top half of a vertical domino, or the left half of a horizontal
// one; which extensions are legal, and which labels they produce on the new
// edges, is exactly what each block of the grids below encodes.

BarPair general_step(const BarPair& prev) {
    const PolyMatrix zero = zero_like(prev.left0);
    BarPair next;
    next.left0 = PolyMatrix::from_blocks({
        {prev.left0 + prev.left1, prev.left0.scaled(BivariatePoly::var_x())},
        {prev.left0, zero},
    });
    next.left1 = PolyMatrix::from_blocks({
        {prev.left0.scaled(BivariatePoly::var_y()), zero},
        {zero, zero},
    });
    return next;
}

BarTriple maximal_step(const BarTriple& prev) {
    const PolyMatrix zero = zero_like(prev.left0);
    const PolyMatrix scaled_x = prev.left0.scaled(BivariatePoly::var_x());
    const PolyMatrix scaled_y = prev.left0.scaled(BivariatePoly::var_y());
    BarTriple next;
    next.left0 = PolyMatrix::from_blocks({
        {prev.left2, prev.left2, scaled_x},
        {prev.left1, zero, zero},
        {prev.left0, prev.left0, zero},
    });
    next.left1 = PolyMatrix::from_blocks({
        {prev.left2, prev.left2, scaled_x},
        {zero, zero, zero},
        {prev.left0, prev.left0, zero},
    });
    next.left2 = PolyMatrix::from_blocks({
        {scaled_y, scaled_y, zero},
        {zero, zero, zero},
        {zero, zero, zero},
    });
    return next;
}

BarTriple right_end_step(const BarTriple& prev) {
    const PolyMatrix zero = zero_like(prev.left0);
    const PolyMatrix scaled_x = prev.left0.scaled(BivariatePoly::var_x());
    BarTriple next;
    next.left0 = PolyMatrix::from_blocks({
        {prev.left1 + prev.left2, scaled_x},
        {prev.left0, zero},
    });
    next.left1 = PolyMatrix::from_blocks({
        {prev.left2, scaled_x},
        {prev.left0, zero},
    });
    next.left2 = PolyMatrix::from_blocks({
        {prev.left0.scaled(BivariatePoly::var_y()), zero},
        {zero, zero},
    });
    return next;
}

BarSextet sextet_base() {
    BarSextet base;
    base.right0.left0 = unit1x1();
    base.right0.left1 = PolyMatrix(1, 1);
    base.right0.left2 = PolyMatrix(1, 1);
    base.right1.left0 = PolyMatrix(1, 1);
    base.right1.left1 = unit1x1();
    base.right1.left2 = PolyMatrix(1, 1);
    return base;
}

// Append-only caches; unique_ptr keeps returned references stable while the
// vectors grow.
template <typename Family, typename Base, typename Step>
const Family& cached_level(std::vector<std::unique_ptr<Family>>& cache, std::mutex& mutex,
                           int length, Base base, Step step) {
    std::lock_guard<std::mutex> lock(mutex);
    if (cache.empty()) cache.push_back(std::make_unique<Family>(base()));
    while (static_cast<int>(cache.size()) <= length)
        cache.push_back(std::make_unique<Family>(step(*cache.back())));
    return *cache[length];
}

}  // namespace

int max_bar_length(int radix) {
    if (radix != 2 && radix != 3)
        throw DimensionError("label radix must be 2 or 3, got " + std::to_string(radix));
    std::lock_guard<std::mutex> lock(limits_mutex());
    return radix == 2 ? limits().radix2 : limits().radix3;
}

void set_max_bar_length(int radix, int limit) {
    if (radix != 2 && radix != 3)
        throw DimensionError("label radix must be 2 or 3, got " + std::to_string(radix));
    if (limit < 0) throw DimensionError("negative bar length cap");
    std::lock_guard<std::mutex> lock(limits_mutex());
    (radix == 2 ? limits().radix2 : limits().radix3) = limit;
}

const BarPair& general_bars(int length) {
    check_length(length, 2);
    static std::vector<std::unique_ptr<BarPair>> cache;
    static std::mutex mutex;
    return cached_level(cache, mutex, length,
                        [] {
                            BarPair base;
                            base.left0 = unit1x1();
                            base.left1 = PolyMatrix(1, 1);
                            return base;
                        },
                        general_step);
}

const BarSextet& maximal_bars(int length) {
    check_length(length, 3);
    static std::vector<std::unique_ptr<BarSextet>> cache;
    static std::mutex mutex;
    return cached_level(cache, mutex, length, sextet_base, [](const BarSextet& prev) {
        BarSextet next;
        next.right0 = maximal_step(prev.right0);
        next.right1 = maximal_step(prev.right1);
        return next;
    });
}

const BarSextet& right_end_bars(int length) {
    check_length(length, 2);
    static std::vector<std::unique_ptr<BarSextet>> cache;
    static std::mutex mutex;
    return cached_level(cache, mutex, length, sextet_base, [](const BarSextet& prev) {
        BarSextet next;
        next.right0 = right_end_step(prev.right0);
        next.right1 = right_end_step(prev.right1);
        return next;
    });
}

}  // namespace domcensus
