/*
  This is matrixmodels.cpp, part of smallchar.
*/
