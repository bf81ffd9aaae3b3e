#include "adw/report.hpp"

namespace adw {

void ResidualSink::relation(std::string_view, std::string_view, std::vector<std::size_t>,
                            const std::vector<Vec>& terms) {
    for (std::size_t t = 1; t < terms.size(); ++t) {
        Vec d = terms[t] - terms[0];
        values_.insert(values_.end(), d.begin(), d.end());
    }
}

std::size_t Report::count(std::string_view equation) const {
    auto it = counts_.find(equation);
    return it == counts_.end() ? 0 : it->second;
}

void Report::add(Violation v) {
    ++total_;
    auto& c = counts_[v.equation];
    if (opt_.exhaustive || c == 0) violations_.push_back(std::move(v));
    ++c;
}

bool Report::equal(std::string_view eq, std::string_view roles, std::vector<std::size_t> witness,
                   const Vec& lhs, const Vec& rhs) {
    if (lhs == rhs) return true;
    add(Violation{std::string(eq), std::string(roles), std::move(witness), 1, lhs, rhs});
    return false;
}

bool Report::equal(std::string_view eq, std::string_view roles, std::vector<std::size_t> witness,
                   const Matrix& lhs, const Matrix& rhs) {
    if (lhs == rhs) return true;
    add(Violation{std::string(eq), std::string(roles), std::move(witness), 1, lhs.flatten(), rhs.flatten()});
    return false;
}

bool Report::chain(std::string_view eq, std::string_view roles, std::vector<std::size_t> witness,
                   const std::vector<Vec>& terms) {
    for (std::size_t t = 1; t < terms.size(); ++t) {
        if (terms[t] == terms[0]) continue;
        add(Violation{std::string(eq), std::string(roles), std::move(witness), t, terms[0], terms[t]});
        return false;
    }
    return true;
}

bool Report::chain(std::string_view eq, std::string_view roles, std::vector<std::size_t> witness,
                   const std::vector<Matrix>& terms) {
    for (std::size_t t = 1; t < terms.size(); ++t) {
        if (terms[t] == terms[0]) continue;
        add(Violation{std::string(eq), std::string(roles), std::move(witness), t, terms[0].flatten(),
                      terms[t].flatten()});
        return false;
    }
    return true;
}

void Report::merge(const Report& other) {
    for (const auto& v : other.violations_) {
        auto& c = counts_[v.equation];
        if (opt_.exhaustive || c == 0) violations_.push_back(v);
        ++c;
    }
    // counts for violations not stored in `other`
    for (const auto& [eq, n] : other.counts_) {
        std::size_t stored = 0;
        for (const auto& v : other.violations_)
            if (v.equation == eq) ++stored;
        counts_[eq] += n - stored;
    }
    total_ += other.total_;
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

void Report::merge(const Report& other, std::string_view label) {
    Report relabelled(opt_);
    for (auto v : other.violations_) {
        v.equation = std::string(label);
        relabelled.violations_.push_back(std::move(v));
    }
    for (const auto& [eq, n] : other.counts_) relabelled.counts_[std::string(label)] += n;
    relabelled.total_ = other.total_;
    relabelled.notes = other.notes;
    merge(relabelled);
}

void Report::merge_prefixed(const Report& other, std::string_view prefix) {
    Report relabelled(opt_);
    for (auto v : other.violations_) {
        v.equation = std::string(prefix) + v.equation;
        relabelled.violations_.push_back(std::move(v));
    }
    for (const auto& [eq, n] : other.counts_) relabelled.counts_[std::string(prefix) + eq] += n;
    relabelled.total_ = other.total_;
    relabelled.notes = other.notes;
    merge(relabelled);
}

}  // namespace adw
