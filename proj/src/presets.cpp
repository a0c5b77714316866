namespace qsd {}
