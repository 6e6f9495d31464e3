int grade_switch(int score) {
  int bucket = score / 10;
  int grade = 0;
  switch (bucket) {
    case 10:
    case 9:
      grade = 4;
      break;
    default:
      grade = 0;
      break;
    case 8:
      grade = 3;
      break;
    case 7:
      grade = 2;
      break;
  }
  return grade;
}
