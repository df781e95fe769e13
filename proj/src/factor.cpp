#include "jbt/factor.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "jbt/errors.hpp"

namespace jbt {
inline namespace factors {

Factor Factor::matrix(int rows, int cols) {
    if (rows <= 0 || cols <= 0)
        throw DomainError("matrix factor needs positive dimensions, got " +
                          std::to_string(rows) + "x" + std::to_string(cols));
    Factor f;
    f.kind_ = FactorKind::Matrix;
    f.rows_ = rows;
    f.cols_ = cols;
    f.dim_ = rows * cols;
    f.rank_ = std::min(rows, cols);
    return f;
}

Factor Factor::commutative(int n) {
    if (n <= 0)
        throw DomainError("commutative factor needs positive dimension, got " +
                          std::to_string(n));
    Factor f;
    f.kind_ = FactorKind::Commutative;
    f.rows_ = n;
    f.dim_ = n;
    f.rank_ = n;
    return f;
}

Factor Factor::direct_sum(std::vector<Factor> parts) {
    if (parts.empty())
        throw DomainError("direct sum needs at least one part");
    // Flatten nested sums so the part list has depth one.
    std::vector<Factor> flat;
    for (auto& p : parts) {
        if (p.kind_ == FactorKind::DirectSum)
            flat.insert(flat.end(), p.parts().begin(), p.parts().end());
        else
            flat.push_back(std::move(p));
    }
    if (flat.size() == 1)
        return flat.front();

    Factor f;
    f.kind_ = FactorKind::DirectSum;
    f.offsets_.reserve(flat.size());
    for (const auto& p : flat) {
        f.offsets_.push_back(f.dim_);
        f.dim_ += p.dim_;
        f.rank_ += p.rank_;
    }
    f.parts_ = std::make_shared<const std::vector<Factor>>(std::move(flat));
    return f;
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw DomainError("bad " + std::string(what) + " in factor spec: '" +
                          std::string(s) + "'");
    return value;
}

Factor parse_single(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw DomainError("factor spec '" + std::string(spec) +
                          "' is missing ':' (expected matrix:PxQ or commutative:N)");
    const std::string_view head = spec.substr(0, colon);
    const std::string_view tail = spec.substr(colon + 1);
    if (head == "matrix" || head == "m") {
        const auto x = tail.find('x');
        if (x == std::string_view::npos)
            throw DomainError("matrix spec '" + std::string(spec) +
                              "' must look like matrix:PxQ");
        return Factor::matrix(parse_int(tail.substr(0, x), "row count"),
                              parse_int(tail.substr(x + 1), "column count"));
    }
    if (head == "commutative" || head == "c")
        return Factor::commutative(parse_int(tail, "dimension"));
    throw DomainError("unknown factor kind '" + std::string(head) + "'");
}

} // namespace

Factor Factor::parse(std::string_view spec) {
    std::vector<Factor> parts;
    std::size_t start = 0;
    while (start <= spec.size()) {
        auto plus = spec.find('+', start);
        if (plus == std::string_view::npos) plus = spec.size();
        parts.push_back(parse_single(spec.substr(start, plus - start)));
        start = plus + 1;
    }
    return parts.size() == 1 ? parts.front() : direct_sum(std::move(parts));
}

int Factor::rows() const {
    if (kind_ != FactorKind::Matrix)
        throw DomainError("rows() called on non-matrix factor " + to_string());
    return rows_;
}

int Factor::cols() const {
    if (kind_ != FactorKind::Matrix)
        throw DomainError("cols() called on non-matrix factor " + to_string());
    return cols_;
}

const std::vector<Factor>& Factor::parts() const {
    if (kind_ != FactorKind::DirectSum)
        throw DomainError("parts() called on non-sum factor " + to_string());
    return *parts_;
}

int Factor::part_offset(std::size_t i) const {
    if (kind_ != FactorKind::DirectSum)
        throw DomainError("part_offset() called on non-sum factor " + to_string());
    return offsets_.at(i);
}

bool Factor::admits_unitary() const {
    switch (kind_) {
    case FactorKind::Matrix: return rows_ == cols_;
    case FactorKind::Commutative: return true;
    case FactorKind::DirectSum:
        return std::all_of(parts_->begin(), parts_->end(),
                           [](const Factor& p) { return p.admits_unitary(); });
    }
    return false;
}

std::string Factor::to_string() const {
    switch (kind_) {
    case FactorKind::Matrix:
        return "matrix:" + std::to_string(rows_) + "x" + std::to_string(cols_);
    case FactorKind::Commutative:
        return "commutative:" + std::to_string(rows_);
    case FactorKind::DirectSum: {
        std::ostringstream out;
        for (std::size_t i = 0; i < parts_->size(); ++i) {
            if (i) out << '+';
            out << (*parts_)[i].to_string();
        }
        return out.str();
    }
    }
    return {};
}

bool Factor::operator==(const Factor& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
    case FactorKind::Matrix: return rows_ == other.rows_ && cols_ == other.cols_;
    case FactorKind::Commutative: return rows_ == other.rows_;
    case FactorKind::DirectSum: return *parts_ == *other.parts_;
    }
    return false;
}

} // namespace factors
} // namespace jbt
