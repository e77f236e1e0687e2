// Single numerical, multiple-choice and matching questions.
#include "samples.hpp"

int main()
{
  qbank::QuestionBank bank("mixed_types.xml");
  samples::build_mixed_types(bank);
  bank.close();
}
