#pragma once

#include "qhl/tensor.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qhl {

enum class Status { Pass, Fail, ExpectedFail, Skipped };

std::string to_string(Status s);

struct CheckRecord
{
    std::string tag;
    Status status = Status::Pass;
    std::optional<Index> witness; // violating basis multi-index
    std::string detail;
};

/// Outcome of a batch of identity checks. A record per identity tag; the
/// report passes iff no record has status Fail.
class VerificationReport
{
public:
    VerificationReport() = default;
    explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

    const std::string& subject() const noexcept { return subject_; }
    const std::vector<CheckRecord>& records() const noexcept { return records_; }
    bool passed() const;
    const CheckRecord* first_failure() const;
    const CheckRecord* find(const std::string& tag) const;

    void add(CheckRecord r) { records_.push_back(std::move(r)); }
    void pass(const std::string& tag, std::string detail = {});
    void fail(const std::string& tag, std::optional<Index> witness, std::string detail = {});

    /// Records tag as Pass iff lhs == rhs; the witness is the first
    /// differing multi-index (input basis indices come first by convention).
    bool expect_equal(const std::string& tag, const Tensor& lhs, const Tensor& rhs);
    bool expect(const std::string& tag, bool ok, std::string detail = {});

    /// Appends all records of `other`, prefixing tags with `prefix`.
    void merge(const VerificationReport& other, const std::string& prefix = {});

    std::string summary() const;

private:
    std::string subject_;
    std::vector<CheckRecord> records_;
};

/// Throws CheckFailed naming the first failure unless the report passed.
void require_passed(const VerificationReport& r, const std::string& context);

} // namespace qhl
