int classify_switch(int code) {
  int result = 0;
  switch (code) {
    case 0:
      result = 100;
      break;
    case 1:
    case 2:
      result = 200 + code;
      break;
    case 7:
      return -7;
    default:
      result = code * 3;
      break;
  }
  return result;
}
