#pragma once

#include "config.hpp"
#include "records.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sixv::cli {

struct CommandResult {
  std::vector<Record> records;
  int exit_code = 0;
};

struct PartitionArgs {
  std::size_t n = 1;
  std::string route = "both";  // oracle | determinant | both
};

struct RowProbArgs {
  std::size_t n = 1;
  std::size_t s = 1;
  std::optional<std::string> positions;
  std::string route = "both";  // formula | oracle | both
};

struct EfpArgs {
  std::size_t n = 1;
  std::size_t r = 1;
  std::size_t s = 1;
  std::string routes = "oracle,row-sum,rep1,rep2,double";
};

struct VerifyArgs {
  std::string suite;
  std::size_t s = 2;
  std::size_t trials = 20;
  unsigned degree = 8;
  std::size_t n_max = 3;
  std::optional<std::size_t> r;
};

CommandResult cmd_partition(const RunConfig& cfg, const PartitionArgs& args);
CommandResult cmd_rowprob(const RunConfig& cfg, const RowProbArgs& args);
CommandResult cmd_efp(const RunConfig& cfg, const EfpArgs& args);
CommandResult cmd_verify(const RunConfig& cfg, const VerifyArgs& args);

}  // namespace sixv::cli
