#pragma once

#include <cstddef>

namespace msqkit::detail {

struct LangSeed {
  const char* lang;
  const char* text;
};

extern const LangSeed kLangSeeds[];
extern const std::size_t kLangSeedCount;

}  // namespace msqkit::detail
