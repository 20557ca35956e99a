#pragma once

#include <stdexcept>
#include <string>

namespace qhl {

/// Base of every error raised by the library. `kind()` is the short,
/// stable error name used in CLI reports.
class Error : public std::runtime_error
{
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind))
    {
    }
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define QHL_DEFINE_ERROR(Name)                                               \
    class Name : public Error                                                \
    {                                                                        \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name, what) {}       \
    }

QHL_DEFINE_ERROR(ShapeMismatch);
QHL_DEFINE_ERROR(FieldMismatch);
QHL_DEFINE_ERROR(NotInvertible);
QHL_DEFINE_ERROR(UnsupportedField);
QHL_DEFINE_ERROR(InvalidGauge);
QHL_DEFINE_ERROR(InternalInconsistency);
QHL_DEFINE_ERROR(IsoCheckFailed);
QHL_DEFINE_ERROR(NotCocommutative);
QHL_DEFINE_ERROR(HypothesisFailed);
QHL_DEFINE_ERROR(StructureMismatch);
QHL_DEFINE_ERROR(NotACocycle);
QHL_DEFINE_ERROR(NoQuasiHopfStructure);
QHL_DEFINE_ERROR(InvalidStructure);
QHL_DEFINE_ERROR(ParseError);
QHL_DEFINE_ERROR(CheckFailed);

#undef QHL_DEFINE_ERROR

} // namespace qhl
