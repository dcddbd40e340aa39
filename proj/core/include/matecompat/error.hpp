#ifndef MATECOMPAT_ERROR_HPP
#define MATECOMPAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace matecompat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is outside its documented domain (R < 1, bin width <= 0, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A caller broke an operation's precondition (e.g. same-gender agreement check).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// One gender pool is empty, so no meeting can take place.
class ExtinctionError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input data. Carries the source and line when known.
class DataError : public Error {
 public:
  DataError(const std::string& source, std::size_t line, const std::string& what)
      : Error(format(source, line, what)), source_(source), line_(line) {}
  explicit DataError(const std::string& what) : Error(what) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& source, std::size_t line,
                            const std::string& what) {
    std::string out = source;
    if (line > 0) out += ":" + std::to_string(line);
    return out + ": " + what;
  }

  std::string source_;
  std::size_t line_ = 0;
};

}  // namespace matecompat

#endif  // MATECOMPAT_ERROR_HPP
