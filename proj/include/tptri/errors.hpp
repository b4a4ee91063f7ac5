#pragma once

#include <stdexcept>
#include <string>

namespace tptri {

// Base class for everything this library throws deliberately.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed scalar, polynomial, expression, or spec-file text.
class ParseError : public Error {
public:
    using Error::Error;
};

// A coefficient generator produced a negative value where a nonnegative
// one is required.  `sequence` is the generator letter (r, s, t, u, v, w).
class NegativeCoefficientError : public Error {
public:
    NegativeCoefficientError(char sequence, long index, const std::string& value)
        : Error(std::string("negative coefficient ") + sequence + "_" +
                std::to_string(index) + " = " + value),
          sequence_(sequence), index_(index) {}

    char sequence() const { return sequence_; }
    long index() const { return index_; }

private:
    char sequence_;
    long index_;
};

// A q-coefficient generator produced a polynomial with a negative coefficient.
class NegativePolyCoefficientError : public Error {
public:
    NegativePolyCoefficientError(char sequence, long index, const std::string& value)
        : Error(std::string("coefficient polynomial ") + sequence + "_" +
                std::to_string(index) + " = " + value + " has a negative coefficient"),
          sequence_(sequence), index_(index) {}

    char sequence() const { return sequence_; }
    long index() const { return index_; }

private:
    char sequence_;
    long index_;
};

// An explicit-list generator was asked for a term past the end of its list.
class UndefinedIndexError : public Error {
public:
    explicit UndefinedIndexError(long index)
        : Error("sequence has no term at index " + std::to_string(index)),
          index_(index) {}

    long index() const { return index_; }

private:
    long index_;
};

// A registered closed-form/recurrence cross-check disagreed at entry (n, k).
class ClosedFormMismatchError : public Error {
public:
    ClosedFormMismatchError(long n, long k,
                            const std::string& closed, const std::string& recursive)
        : Error("closed form disagrees with recurrence at (" + std::to_string(n) +
                ", " + std::to_string(k) + "): " + closed + " vs " + recursive),
          n_(n), k_(k) {}

    long n() const { return n_; }
    long k() const { return k_; }

private:
    long n_;
    long k_;
};

// A tridiagonal operation that requires nonnegative bands saw a negative entry.
class NotNonnegativeError : public Error {
public:
    using Error::Error;
};

// Sequence analysis (log-convexity and friends) saw a negative term.
class NegativeTermError : public Error {
public:
    NegativeTermError(long index, const std::string& value)
        : Error("sequence term a_" + std::to_string(index) + " = " + value +
                " is negative"),
          index_(index) {}

    long index() const { return index_; }

private:
    long index_;
};

// A Hankel matrix was requested beyond the terms the sequence provides.
class InsufficientLengthError : public Error {
public:
    InsufficientLengthError(std::size_t have, std::size_t need)
        : Error("sequence has " + std::to_string(have) + " terms but " +
                std::to_string(need) + " are required") {}
};

// Row/column selections outside the matrix, or non-strictly-increasing ones.
class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

// Criterion name not recognized by the checker it was handed to.
class UnknownCriterionError : public Error {
public:
    explicit UnknownCriterionError(const std::string& name)
        : Error("unknown criterion \"" + name + "\"") {}
};

}  // namespace tptri
