#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace vdl::js::detail {

// Backtracking matcher for the small pattern language RegExp(...) accepts:
// literals, ".", classes, \d \w \s (and negations), groups, "|", "*", "+",
// "?", "^", "$". Exponential patterns stay exponential; every attempted
// match step is reported through `tick` so callers can bound the work.
class Regex {
 public:
  explicit Regex(std::u16string_view pattern);  // throws std::invalid_argument
  ~Regex();
  Regex(Regex&&) noexcept;
  Regex& operator=(Regex&&) noexcept;

  bool test(std::u16string_view input, const std::function<void()>& tick) const;
  const std::u16string& source() const { return source_; }

  struct Node;

 private:
  std::u16string source_;
  std::unique_ptr<Node> root_;
};

}  // namespace vdl::js::detail
