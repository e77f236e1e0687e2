// Rendering-equation terms from (key, answer) pairs plus extra distractors.
#include "samples.hpp"

int main()
{
  qbank::QuestionBank bank("rendering_equation.xml");
  samples::build_rendering_equation(bank);
  bank.close();
}
