#pragma once

// Overflow-checked 64-bit integer usable as an Eigen scalar.

#include <Eigen/Core>
#include <cstdint>
#include <ostream>

#include "dtwist/error.hpp"

namespace dt {

class Int {
public:
    constexpr Int() = default;
    constexpr Int(long long v) : v_(v) {}

    constexpr long long value() const { return v_; }
    explicit operator long long() const { return v_; }

    friend Int operator+(Int a, Int b) {
        long long r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) overflow();
        return r;
    }
    friend Int operator-(Int a, Int b) {
        long long r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) overflow();
        return r;
    }
    friend Int operator*(Int a, Int b) {
        long long r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) overflow();
        return r;
    }
    friend Int operator/(Int a, Int b) {
        if (b.v_ == 0) fail(ErrorKind::Overflow, "integer division by zero");
        return a.v_ / b.v_;
    }
    Int operator-() const { return Int(0) - *this; }
    Int &operator+=(Int b) { return *this = *this + b; }
    Int &operator-=(Int b) { return *this = *this - b; }
    Int &operator*=(Int b) { return *this = *this * b; }

    friend constexpr bool operator==(Int a, Int b) { return a.v_ == b.v_; }
    friend constexpr auto operator<=>(Int a, Int b) { return a.v_ <=> b.v_; }

    friend std::ostream &operator<<(std::ostream &os, Int a) { return os << a.v_; }

private:
    [[noreturn]] static void overflow() { fail(ErrorKind::Overflow, "64-bit integer overflow"); }
    long long v_ = 0;
};

inline Int abs(Int a) { return a < 0 ? -a : a; }

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IMatrix = Matrix<Int>;
using IVector = Vector<Int>;

} // namespace dt

namespace Eigen {
template <>
struct NumTraits<dt::Int> : GenericNumTraits<long long> {
    using Real = dt::Int;
    using NonInteger = dt::Int;
    using Literal = dt::Int;
    using Nested = dt::Int;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 3
    };
    static inline dt::Int epsilon() { return 0; }
    static inline dt::Int dummy_precision() { return 0; }
    static inline dt::Int highest() { return std::numeric_limits<long long>::max(); }
    static inline dt::Int lowest() { return std::numeric_limits<long long>::min(); }
    static inline int digits10() { return 18; }
};
} // namespace Eigen
