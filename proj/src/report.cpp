#include "qhl/report.hpp"

#include "qhl/errors.hpp"

#include <sstream>

namespace qhl {

std::string to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::ExpectedFail: return "expected-fail";
    case Status::Skipped: return "skipped";
    }
    return "?";
}

bool VerificationReport::passed() const
{
    return first_failure() == nullptr;
}

const CheckRecord* VerificationReport::first_failure() const
{
    for (const auto& r : records_)
        if (r.status == Status::Fail)
            return &r;
    return nullptr;
}

const CheckRecord* VerificationReport::find(const std::string& tag) const
{
    for (const auto& r : records_)
        if (r.tag == tag)
            return &r;
    return nullptr;
}

void VerificationReport::pass(const std::string& tag, std::string detail)
{
    records_.push_back({tag, Status::Pass, std::nullopt, std::move(detail)});
}

void VerificationReport::fail(const std::string& tag, std::optional<Index> witness, std::string detail)
{
    records_.push_back({tag, Status::Fail, std::move(witness), std::move(detail)});
}

bool VerificationReport::expect_equal(const std::string& tag, const Tensor& lhs, const Tensor& rhs)
{
    if (lhs.shape() != rhs.shape()) {
        fail(tag, std::nullopt, "shape mismatch");
        return false;
    }
    auto w = lhs.first_difference(rhs);
    if (!w) {
        pass(tag);
        return true;
    }
    std::ostringstream os;
    os << "lhs " << lhs.at(*w) << " vs rhs " << rhs.at(*w);
    fail(tag, w, os.str());
    return false;
}

bool VerificationReport::expect(const std::string& tag, bool ok, std::string detail)
{
    if (ok)
        pass(tag, std::move(detail));
    else
        fail(tag, std::nullopt, std::move(detail));
    return ok;
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix)
{
    for (auto r : other.records_) {
        r.tag = prefix + r.tag;
        records_.push_back(std::move(r));
    }
}

std::string VerificationReport::summary() const
{
    std::ostringstream os;
    os << (subject_.empty() ? "report" : subject_) << ": " << (passed() ? "pass" : "FAIL");
    if (auto f = first_failure()) {
        os << " at " << f->tag;
        if (f->witness) {
            os << " witness (";
            for (std::size_t i = 0; i < f->witness->size(); ++i)
                os << (i ? "," : "") << (*f->witness)[i];
            os << ")";
        }
        if (!f->detail.empty())
            os << " " << f->detail;
    }
    return os.str();
}

void require_passed(const VerificationReport& r, const std::string& context)
{
    if (!r.passed())
        throw CheckFailed(context + ": " + r.summary());
}

} // namespace qhl
