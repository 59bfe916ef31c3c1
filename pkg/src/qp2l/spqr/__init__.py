"""SPQR machinery: triconnectivity, the rooted tree, embedding-type
classification, the gadget dictionary, and the bottom-up/top-down solver."""
