#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qons {

using Int = mpz_class;
using Rat = mpq_class;

/* Thrown on mathematically undefined operations (division by zero,
 * converting a proper rational function to a Laurent polynomial, ...). */
struct ArithError : std::runtime_error {
	explicit ArithError(const std::string& what) : std::runtime_error(what) {}
};

/* Malformed input: bad generator index, alphabet mismatch, degree overflow. */
struct UsageError : std::invalid_argument {
	explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/* A computation exceeded its configured bound (headroom cap, row cap). */
struct ResourceError : std::runtime_error {
	explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat_of(long num, long den = 1) {
	Rat r(num, den);
	r.canonicalize();
	return r;
}

}  // namespace qons
