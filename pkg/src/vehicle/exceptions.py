"""Vehicle kinematics exceptions"""


class VehicleError(Exception):
    """A Vehicle Error has ocurred"""


class CommandError(VehicleError):
    """Velocity command or integration step outside the supported envelope"""
