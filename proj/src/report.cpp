#include "wildram/report.hpp"

namespace wildram {

std::string verdict_name(CheckVerdict v)
{
    switch (v) {
        case CheckVerdict::Pass:
            return "pass";
        case CheckVerdict::Fail:
            return "fail";
        case CheckVerdict::Indeterminate:
            return "indeterminate";
    }
    return "?";
}

std::size_t Report::count(CheckVerdict v) const
{
    std::size_t c = 0;
    for (const auto& r : checks)
        if (r.verdict == v)
            ++c;
    return c;
}

int Report::exit_code() const
{
    if (count(CheckVerdict::Fail) > 0)
        return 1;
    if (count(CheckVerdict::Indeterminate) > 0)
        return 2;
    return 0;
}

}  // namespace wildram
