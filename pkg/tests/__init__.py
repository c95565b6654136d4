"""
Edge Ideal Analysis Platform - Test Package
Author: andrewanolasco@
Version: V1.0.0
"""
