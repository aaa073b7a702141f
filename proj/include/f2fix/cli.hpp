// Request handling behind the f2fix command-line tool.

#ifndef F2FIX_CLI_HPP_
#define F2FIX_CLI_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "f2fix/mofix.hpp"
#include "f2fix/words.hpp"

namespace f2fix::cli {

  enum class Format { Text, Json };

  struct Request {
    std::string                 command;
    std::optional<std::string>  endo;
    std::optional<std::string>  word;
    std::optional<std::string>  z;
    std::optional<std::int64_t> k;
    SearchBudget                budget;
    std::int64_t                oracle_len = 8;
    Format                      format     = Format::Text;
  };

  struct Response {
    int         exit_code = 0;
    std::string output;
  };

  inline constexpr int exit_ok           = 0;
  inline constexpr int exit_input_error  = 1;
  inline constexpr int exit_inconclusive = 2;

  //! Parse "a->WORD;b->WORD". Throws ParseError with a position into text.
  Endomorphism parse_endo(std::string_view text);

  //! Run one request. Never throws for bad input; such errors give exit
  //! code 1 and an error report.
  Response run(Request const& req);

}  // namespace f2fix::cli

#endif  // F2FIX_CLI_HPP_
