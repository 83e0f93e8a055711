#ifndef QHO_ERRORS_HPP
#define QHO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qho {

/* Computation failures carry a stable machine-readable code so the CLI can
   emit a structured error record without string-matching what() text. */
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/* The truncation rule "keep everything up to the (n_max, n_max) level" is
   meaningless once the lowest member of some shell n <= n_max is no longer
   the l = n one. */
struct InversionBeforeNmax : Error {
  explicit InversionBeforeNmax(const std::string& what)
      : Error("InversionBeforeNmax", what) {}
};

/* E' = E - eps*E^2 stops being an order-preserving map at E = 1/(2 eps);
   a retained level at or beyond that point would scramble the spectrum. */
struct NonMonotoneVfo : Error {
  explicit NonMonotoneVfo(const std::string& what)
      : Error("NonMonotoneVfo", what) {}
};

struct CutExceedsScheme : Error {
  explicit CutExceedsScheme(const std::string& what)
      : Error("CutExceedsScheme", what) {}
};

struct RankDeficient : Error {
  explicit RankDeficient(const std::string& what)
      : Error("RankDeficient", what) {}
};

struct TooFewExtrema : Error {
  explicit TooFewExtrema(const std::string& what)
      : Error("TooFewExtrema", what) {}
};

struct RangeOutOfTable : Error {
  explicit RangeOutOfTable(const std::string& what)
      : Error("RangeOutOfTable", what) {}
};

struct EmptyInput : Error {
  explicit EmptyInput(const std::string& what) : Error("EmptyInput", what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error("ConfigError", what) {}
};

}  // namespace qho

#endif
