// Derivative questions from (function, derivative) pairs.
#include "samples.hpp"

#include "qbank/preview.hpp"

#include <string_view>

int main(int argc, char** argv)
{
  qbank::QuestionBank bank("derivatives.xml");
  samples::build_derivatives(bank);
  if (argc > 1 && std::string_view(argv[1]) == "--preview") {
    qbank::preview(bank);
  }
  bank.close();
}
