import kepler
