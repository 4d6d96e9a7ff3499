"""运行上下文管理模块"""
