namespace relink {}
