#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "adw/errors.hpp"
#include "adw/linalg.hpp"

namespace adw {

/// One failed identity instance.
struct Violation {
    std::string equation;                 ///< identity label, e.g. "A1", "R3", "S14"
    std::string roles;                    ///< role letter per witness index, e.g. "xya"
    std::vector<std::size_t> witness;     ///< basis indices in role order
    std::size_t term = 1;                 ///< chain position that disagrees with position 0
    Vec lhs, rhs;
};

struct CheckOptions {
    /// Keep every violation instead of the first one per equation.
    bool exhaustive = false;
};

/// Receiver of evaluated identities: each relation asserts that all terms are equal.
class Sink {
public:
    virtual ~Sink() = default;
    virtual void relation(std::string_view eq, std::string_view roles, std::vector<std::size_t> witness,
                          const std::vector<Vec>& terms) = 0;
};

/// Collects term differences (terms[t] - terms[0]) into one flat vector.
class ResidualSink : public Sink {
public:
    void relation(std::string_view, std::string_view, std::vector<std::size_t>,
                  const std::vector<Vec>& terms) override;
    const std::vector<Scalar>& values() const { return values_; }
    Vec vec() const { return Vec(values_); }

private:
    std::vector<Scalar> values_;
};

/**
 * Outcome of a verification. Counts every violation; stores the first one
 * per equation label (or all of them in exhaustive mode).
 */
class Report : public Sink {
public:
    explicit Report(CheckOptions opt = {}) : opt_(opt) {}

    bool ok() const { return total_ == 0; }
    std::size_t total() const { return total_; }
    const std::vector<Violation>& violations() const { return violations_; }
    /// Violation count for one equation label.
    std::size_t count(std::string_view equation) const;
    const std::map<std::string, std::size_t, std::less<>>& counts() const { return counts_; }
    const CheckOptions& options() const { return opt_; }

    void add(Violation v);
    /// Records a violation when lhs != rhs.
    bool equal(std::string_view eq, std::string_view roles, std::vector<std::size_t> witness,
               const Vec& lhs, const Vec& rhs);
    bool equal(std::string_view eq, std::string_view roles, std::vector<std::size_t> witness,
               const Matrix& lhs, const Matrix& rhs);
    /// Records one violation when the terms are not all equal.
    bool chain(std::string_view eq, std::string_view roles, std::vector<std::size_t> witness,
               const std::vector<Vec>& terms);
    bool chain(std::string_view eq, std::string_view roles, std::vector<std::size_t> witness,
               const std::vector<Matrix>& terms);
    void merge(const Report& other);
    /// Merge with every equation label replaced by `label`.
    void merge(const Report& other, std::string_view label);
    /// Merge with `prefix` prepended to every equation label.
    void merge_prefixed(const Report& other, std::string_view prefix);
    void relation(std::string_view eq, std::string_view roles, std::vector<std::size_t> witness,
                  const std::vector<Vec>& terms) override {
        chain(eq, roles, std::move(witness), terms);
    }

    std::vector<std::string> notes;

private:
    CheckOptions opt_;
    std::size_t total_ = 0;
    std::vector<Violation> violations_;
    std::map<std::string, std::size_t, std::less<>> counts_;
};

/// Precondition failure that carries the failing verification report.
class CheckFailure : public PreconditionError {
public:
    CheckFailure(const std::string& what, const Report& report) : PreconditionError(what), report_(report) {}
    const Report& report() const { return report_; }

private:
    Report report_;
};

}  // namespace adw
