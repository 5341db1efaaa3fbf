#ifndef HMF_ERRORS_HPP
#define HMF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hmf {

/* Base class for every error raised on bad domain input.  The code is a
 * short stable token used by the CLI for machine-readable diagnostics. */
class DomainError : public std::runtime_error {
  public:
    DomainError(std::string code, std::string const & what)
        : std::runtime_error(what), code_(std::move(code)) {}
    std::string const & code() const noexcept { return code_; }

  private:
    std::string code_;
};

class InvalidArgument : public DomainError {
  public:
    explicit InvalidArgument(std::string const & what)
        : DomainError("invalid_argument", what) {}
};

class NotSquarefreeError : public DomainError {
  public:
    explicit NotSquarefreeError(std::string const & what)
        : DomainError("not_squarefree", what) {}
};

/* p divides the index [O_F : Z[omega]]; Kummer-Dedekind does not apply. */
class IndexDivisorError : public DomainError {
  public:
    explicit IndexDivisorError(std::string const & what)
        : DomainError("index_divisor", what) {}
};

class BudgetExceededError : public DomainError {
  public:
    explicit BudgetExceededError(std::string const & what)
        : DomainError("budget_exceeded", what) {}
};

class MissingPrimeError : public DomainError {
  public:
    explicit MissingPrimeError(std::string const & what)
        : DomainError("missing_prime", what) {}
};

/* A Hecke identity failed on computed data; this always means a bug. */
class IdentityFailure : public DomainError {
  public:
    explicit IdentityFailure(std::string const & what)
        : DomainError("identity_failure", what) {}
};

}  // namespace hmf

#endif  // HMF_ERRORS_HPP
