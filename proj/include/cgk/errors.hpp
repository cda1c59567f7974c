#ifndef CGK_ERRORS_HPP
#define CGK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cgk {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CGK_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& what) : Error(what) {} \
    }

CGK_DEFINE_ERROR(DivisionByZero);
CGK_DEFINE_ERROR(InvalidSpec);
CGK_DEFINE_ERROR(UnsupportedFamily);
CGK_DEFINE_ERROR(UnknownGenerator);
CGK_DEFINE_ERROR(UnsupportedGenerator);
CGK_DEFINE_ERROR(MissingParameter);
CGK_DEFINE_ERROR(InfiniteSelection);
CGK_DEFINE_ERROR(VariableMismatch);
CGK_DEFINE_ERROR(ConditionNotSatisfied);
CGK_DEFINE_ERROR(ParseError);
CGK_DEFINE_ERROR(NoMultiplier);

#undef CGK_DEFINE_ERROR

}  // namespace cgk

#endif  // CGK_ERRORS_HPP
