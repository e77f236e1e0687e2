// Fill-in-the-blank questions over a vertex shader.
#include "samples.hpp"

int main()
{
  qbank::QuestionBank bank("complete_shader.xml");
  samples::build_complete_shader(bank);
  bank.close();
}
